"""
Archimedean weights of level-one Siegel modular forms on Sp6.
"""
from dataclasses import dataclass
from typing import Tuple

from src.algebra.scalars import RATIONAL
from src.errors import WeightConstraintViolated
from src.satake.multisets import EigenMultiset


@dataclass(frozen=True)
class ArchWeightParam:
    k1: int
    k2: int
    k3: int

    @property
    def abc(self) -> Tuple[int, int, int]:
        return (self.k1 - 1, self.k2 - 2, self.k3 - 3)

    @property
    def w(self) -> Tuple[int, int, int, int]:
        a, b, c = self.abc
        return ((a + b + c) // 2, (a + b - c) // 2, (a - b + c) // 2, abs(a - b - c) // 2)

    def to_json(self) -> dict:
        a, b, c = self.abc
        return {"a": a, "b": b, "c": c, "w": list(self.w)}


def siegel_weights(k1: int, k2: int, k3: int) -> ArchWeightParam:
    """(a, b, c) = (k1-1, k2-2, k3-3) and w = ((a+b+c)/2, (a+b-c)/2, (a-b+c)/2, |a-b-c|/2)."""
    if any(isinstance(k, bool) or not isinstance(k, int) for k in (k1, k2, k3)):
        raise WeightConstraintViolated("weights must be integers")
    if not k1 >= k2 >= k3:
        raise WeightConstraintViolated(f"weights must satisfy k1 >= k2 >= k3, got ({k1}, {k2}, {k3})")
    if k3 < 4:
        raise WeightConstraintViolated(f"k3 must be at least 4, got {k3}")
    if (k1 + k2 + k3) % 2:
        raise WeightConstraintViolated(f"k1 + k2 + k3 must be even, got {k1 + k2 + k3}")
    return ArchWeightParam(k1, k2, k3)


def arch_spin(wp: ArchWeightParam) -> EigenMultiset:
    """Additive spin infinitesimal character {+-w1, ..., +-w4}."""
    values = []
    for w in wp.w:
        values.extend([w, -w])
    return EigenMultiset.of(values, RATIONAL)


def arch_std(wp: ArchWeightParam) -> EigenMultiset:
    """Additive std infinitesimal character {0, +-a, +-b, +-c}."""
    values = [0]
    for x in wp.abc:
        values.extend([x, -x])
    return EigenMultiset.of(values, RATIONAL)
