"""
Shape-level facts about the spinor L-function of a Siegel parameter.

Nothing here is computed analytically: the functional equation and the pole
at s = 1 are read off the shape of the degree-8 parameter.
"""
from dataclasses import dataclass
from typing import List, Optional

from src.arthur.params import ArthurParam
from src.lfunctions.archimedean import GammaProduct, gamma_factor
from src.lfunctions.root_numbers import SignStep, epsilon_sign
from src.satake.weights import ArchWeightParam

SHAPE_NOTE = "pole at s = 1 and sign read from the parameter shape; s = 0 is not examined"


@dataclass(frozen=True)
class SpinLMetadata:
    degree: int
    gamma: Optional[GammaProduct]
    functional_equation: str
    epsilon: int
    epsilon_trace: List[SignStep]
    pole_at_one: bool
    note: str = SHAPE_NOTE

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "gamma": self.gamma.to_json() if self.gamma else None,
            "functional_equation": self.functional_equation,
            "epsilon": self.epsilon,
            "epsilon_trace": [s.to_json() for s in self.epsilon_trace],
            "pole_at_one": self.pole_at_one,
            "note": self.note,
        }


def spin_l_metadata(param: ArthurParam, weights: Optional[ArchWeightParam] = None) -> SpinLMetadata:
    sign, trace = epsilon_sign(param)
    return SpinLMetadata(
        degree=param.degree,
        gamma=gamma_factor(weights) if weights is not None else None,
        functional_equation="L(s, spin) = L(1 - s, spin)" if sign == 1 else "L(s, spin) = -L(1 - s, spin)",
        epsilon=sign,
        epsilon_trace=trace,
        pole_at_one=param.contains_trivial(),
    )
