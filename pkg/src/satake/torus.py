"""
Torus parameters for GSpin groups.

A parameter is (x_1, ..., x_n; mu). Spin eigenvalues are mu * prod_{i in S} x_i
over subsets S, standard eigenvalues are x_i^{+-1} (plus 1 in the odd case),
and the central character is mu^2 * prod x_i.
"""
from dataclasses import dataclass, replace
from typing import Iterable, Sequence, Tuple

from src.algebra.scalars import RATIONAL, ScalarField
from src.errors import ZeroScalar

ODD = "GSpinOdd"
EVEN = "GSpinEven"


@dataclass(frozen=True, eq=False)
class GSpinParam:
    n: int
    chi: Tuple
    mu: object
    field: ScalarField = RATIONAL

    group = ""

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("rank must be non-negative")
        if len(self.chi) != self.n:
            raise ValueError(f"chi has {len(self.chi)} entries, rank is {self.n}")
        for k, x in enumerate(self.chi):
            if self.field.is_zero(x):
                raise ZeroScalar(f"chi[{k}] must be nonzero")
        if self.field.is_zero(self.mu):
            raise ZeroScalar("mu must be nonzero")

    @classmethod
    def of(cls, chi: Iterable, mu, field: ScalarField = RATIONAL):
        values = tuple(field.convert(x) for x in chi)
        return cls(len(values), values, field.convert(mu), field)

    @classmethod
    def ones(cls, n: int, field: ScalarField = RATIONAL):
        return cls(n, (field.one,) * n, field.one, field)

    def central_character(self):
        """mu^2 * prod x_i."""
        return self.mu * self.mu * self.field.product(self.chi)

    def weyl_invert(self, i: int):
        """x_i -> 1/x_i with mu -> mu x_i."""
        chi = list(self.chi)
        x = chi[i]
        chi[i] = self.field.one / x
        return replace(self, chi=tuple(chi), mu=self.mu * x)

    def permute(self, order: Sequence[int]):
        return replace(self, chi=tuple(self.chi[i] for i in order))

    def equals(self, other: "GSpinParam") -> bool:
        eq = self.field.eq
        return (
            self.group == other.group
            and self.n == other.n
            and self.field.mode is other.field.mode
            and all(eq(a, b) for a, b in zip(self.chi, other.chi))
            and eq(self.mu, other.mu)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, GSpinParam):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "n": self.n,
            "chi": [self.field.to_json(x) for x in self.chi],
            "mu": self.field.to_json(self.mu),
            "mode": self.field.mode.value,
        }


@dataclass(frozen=True, eq=False)
class GSpinOddParam(GSpinParam):
    """Parameter for GSpin_{2n+1}."""

    group = ODD


@dataclass(frozen=True, eq=False)
class GSpinEvenParam(GSpinParam):
    """Parameter for GSpin_{2n}."""

    group = EVEN
