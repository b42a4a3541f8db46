"""
Sign of the functional equation at s = 1/2 for an Arthur parameter.

A term pi (x) S_d contributes eps(pi, 1/2)^d: orthogonal constituents
contribute +1, symplectic ones their declared root number, which drops out
for even d.
"""
import logging
from dataclasses import dataclass
from typing import List, Tuple

from src.arthur.params import ArthurParam, SelfDualType
from src.errors import MissingRootNumber, MissingSelfdualType, ShapeInvalid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignStep:
    label: str
    d: int
    contribution: int
    reason: str

    def to_json(self) -> dict:
        return {"label": self.label, "d": self.d, "contribution": self.contribution, "reason": self.reason}


def epsilon_sign(p: ArthurParam, generic: bool = False) -> Tuple[int, List[SignStep]]:
    """Total sign and the per-term trace that produced it.

    ``generic`` asserts the parameter is tempered, so every d must be 1.
    """
    if generic and any(t.d != 1 for t in p.terms):
        raise ShapeInvalid("a generic parameter has no Arthur SL2 factors")
    sign = 1
    trace: List[SignStep] = []
    for term in p.terms:
        c = term.constituent
        if c.selfdual in (None, SelfDualType.NONE):
            raise MissingSelfdualType(f"{c.label} carries no self-dual type")
        if c.selfdual is SelfDualType.ORTHOGONAL:
            step = SignStep(c.label, term.d, 1, "orthogonal")
        elif term.d % 2 == 0:
            step = SignStep(c.label, term.d, 1, f"symplectic, sign raised to the even power {term.d}")
        elif c.root_number is None:
            raise MissingRootNumber(f"symplectic constituent {c.label} needs a declared root number")
        else:
            step = SignStep(c.label, term.d, c.root_number, "symplectic, declared root number")
        sign *= step.contribution
        trace.append(step)
    logger.debug("epsilon sign %+d from %d terms", sign, len(trace))
    return sign, trace
