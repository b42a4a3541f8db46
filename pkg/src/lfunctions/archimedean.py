"""
Archimedean factors prod_i Gamma_C(s + w_i) with Gamma_C(s) = 2 (2 pi)^{-s} Gamma(s).
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import mpmath

from src.config import Config
from src.errors import PoleAt
from src.satake.weights import ArchWeightParam

logger = logging.getLogger(__name__)


def _is_pole(z: complex, eps: float) -> bool:
    if abs(z.imag) > eps:
        return False
    k = round(z.real)
    return k <= 0 and abs(z.real - k) <= eps


def gamma_c(s: complex, eps: Optional[float] = None) -> complex:
    """2 (2 pi)^{-s} Gamma(s); raises PoleAt on s = 0, -1, -2, ..."""
    eps = Config.EPS_NUM if eps is None else eps
    s = complex(s)
    if _is_pole(s, eps):
        raise PoleAt(s)
    value = 2 * mpmath.power(2 * mpmath.pi, -mpmath.mpc(s)) * mpmath.gamma(mpmath.mpc(s))
    return complex(value)


@dataclass(frozen=True)
class GammaProduct:
    shifts: Tuple[int, ...]

    def __post_init__(self):
        if any(a <= b for a, b in zip(self.shifts, self.shifts[1:])):
            raise ValueError(f"Gamma shifts must be strictly decreasing, got {list(self.shifts)}")
        if self.shifts and self.shifts[-1] < 0:
            raise ValueError(f"Gamma shifts must be non-negative, got {list(self.shifts)}")

    def poles(self, count: int = 3) -> List[int]:
        """The first ``count`` poles of each factor, s = -w_i - k, largest first."""
        found = {-w - k for w in self.shifts for k in range(count)}
        return sorted(found, reverse=True)

    def to_json(self) -> dict:
        return {"shifts": list(self.shifts)}


def gamma_factor(wp: ArchWeightParam) -> GammaProduct:
    return GammaProduct(tuple(wp.w))


def gamma_eval(gp: GammaProduct, s: complex, eps: Optional[float] = None) -> complex:
    eps = Config.EPS_NUM if eps is None else eps
    s = complex(s)
    for w in gp.shifts:
        if _is_pole(s + w, eps):
            raise PoleAt(s)
    value = mpmath.mpc(1)
    for w in gp.shifts:
        value *= gamma_c(s + w, eps)
    logger.debug("Gamma product %s at s=%s", list(gp.shifts), s)
    return complex(value)
