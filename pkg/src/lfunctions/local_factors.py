"""
Local L-factors as exact polynomials det(1 - c T) in T = p^{-s}.
"""
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy.polys.rings import ring

from src.algebra.scalars import RATIONAL, ScalarField
from src.arthur.params import ArthurParam, param_satake_at_p, tensor_constituent
from src.arthur.shapes import NonTempered, spin_shape_of_siegel
from src.errors import NotG2Type, SizeMismatch
from src.satake.g2 import g2_test
from src.satake.multisets import EigenMultiset
from src.satake.representations import spin_eigen, std_eigen
from src.satake.torus import GSpinOddParam

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _series_ring(field: ScalarField):
    r, t = ring("T", field.domain)
    return r, t


@dataclass(frozen=True, eq=False)
class LocalFactor:
    """P(T) = sum coeffs[k] T^k with coeffs[0] = 1, nominal degree ``degree``."""

    p: int
    degree: int
    coeffs: Tuple
    field: ScalarField = RATIONAL

    @classmethod
    def from_coeffs(cls, p: int, coeffs: Sequence, field: ScalarField = RATIONAL, degree: Optional[int] = None):
        values = tuple(field.convert(c) for c in coeffs)
        return cls(p, len(values) - 1 if degree is None else degree, values, field)

    @classmethod
    def from_poly(cls, p: int, degree: int, poly, field: ScalarField) -> "LocalFactor":
        zero = field.zero
        top = max([degree] + [m[0] for m in poly.keys()])
        return cls(p, degree, tuple(poly.get((k,), zero) for k in range(top + 1)), field)

    @cached_property
    def poly(self):
        r, _ = _series_ring(self.field)
        return r.from_dict({(k,): c for k, c in enumerate(self.coeffs) if not self.field.is_zero(c)})

    def __mul__(self, other: "LocalFactor") -> "LocalFactor":
        self.field.require_same(other.field)
        if self.p != other.p:
            raise SizeMismatch(f"cannot multiply local factors at p={self.p} and p={other.p}")
        return LocalFactor.from_poly(self.p, self.degree + other.degree, self.poly * other.poly, self.field)

    def divide(self, other: "LocalFactor") -> Tuple["LocalFactor", bool]:
        """Quotient by other, and whether the division is exact."""
        q, r = divmod(self.poly, other.poly)
        return LocalFactor.from_poly(self.p, self.degree - other.degree, q, self.field), not r

    def _padded(self, n: int) -> List:
        return list(self.coeffs) + [self.field.zero] * (n - len(self.coeffs))

    def equals(self, other: "LocalFactor") -> bool:
        if other.field.mode is not self.field.mode or self.p != other.p:
            return False
        n = max(len(self.coeffs), len(other.coeffs))
        return all(self.field.eq(a, b) for a, b in zip(self._padded(n), other._padded(n)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LocalFactor):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def is_palindromic(self, sign: int = 1) -> bool:
        """T^N P(1/T) = sign * P(T)."""
        c = self._padded(self.degree + 1)
        if len(c) > self.degree + 1:
            return False
        return all(self.field.eq(c[k], c[self.degree - k] * sign) for k in range(self.degree + 1))

    @cached_property
    def numeric_coeffs(self) -> List[complex]:
        return [self.field.to_complex(c, q_value=self.p) for c in self.coeffs]

    def evaluate(self, t: complex) -> complex:
        acc = 0j
        for c in reversed(self.numeric_coeffs):
            acc = acc * t + c
        return acc

    def to_json(self) -> dict:
        return {"p": self.p, "coeffs": [self.field.to_json(c) for c in self._padded(self.degree + 1)]}


def local_factor(eigen: EigenMultiset, p: int) -> LocalFactor:
    """prod over lambda of (1 - lambda T)."""
    field = eigen.field
    r, t = _series_ring(field)
    poly = r.one
    for lam in eigen.values:
        poly = poly * (r.one - t.mul_ground(lam))
    return LocalFactor.from_poly(p, len(eigen), poly, field)


def one_minus_t(p: int, field: ScalarField = RATIONAL) -> LocalFactor:
    """The local factor (1 - T) of the Riemann zeta function."""
    return local_factor(EigenMultiset((field.one,), field), p)


@dataclass(frozen=True)
class IdentityCheck:
    holds: bool
    lhs: LocalFactor
    rhs: LocalFactor

    def to_json(self) -> dict:
        return {"holds": self.holds, "lhs": self.lhs.to_json(), "rhs": self.rhs.to_json()}


def g2_euler_identity(c: GSpinOddParam, p: int = 0, strict: bool = True) -> IdentityCheck:
    """det(1 - spin(c) T) against (1 - T) det(1 - std(c) T)."""
    if strict and not g2_test(c):
        raise NotG2Type("the parameter has no spin eigenvalue 1")
    lhs = local_factor(spin_eigen(c), p)
    rhs = one_minus_t(p, c.field) * local_factor(std_eigen(c), p)
    return IdentityCheck(lhs.equals(rhs), lhs, rhs)


def g2_euler_identity_check(c: GSpinOddParam, strict: bool = True) -> bool:
    return g2_euler_identity(c, strict=strict).holds


def term_factors(param: ArthurParam, prime: int, q=None) -> List[LocalFactor]:
    """Godement-Jacquet factors L(s - shift, pi_i) for every term and every S_d shift."""
    field = param.field
    if q is None and any(t.d > 1 for t in param.terms):
        q = field.default_q(prime)
    elif q is not None:
        q = field.convert(q)
    factors = []
    for term in param.terms:
        c = term.constituent.satake_at(prime)
        for j in range(term.d):
            shift = field.half_power(q, term.d - 1 - 2 * j) if term.d > 1 else field.one
            factors.append(local_factor(c.scale(shift), prime))
    return factors


def constituent_product_check(
    param: ArthurParam,
    prime: int,
    constituent_factors: Optional[Iterable[LocalFactor]] = None,
    q=None,
) -> bool:
    """The factor of the evaluated parameter equals the product of its constituents' factors."""
    lhs = local_factor(param_satake_at_p(param, prime, q), prime)
    factors = list(constituent_factors) if constituent_factors is not None else term_factors(param, prime, q)
    rhs = one_factor(prime, param.field)
    for f in factors:
        rhs = rhs * f
    return lhs.equals(rhs)


def one_factor(p: int, field: ScalarField = RATIONAL) -> LocalFactor:
    return LocalFactor(p, 0, (field.one,), field)


def langlands_factor_nontempered(shape: NonTempered, prime: int, q=None) -> bool:
    """L(s, spin) = L(s, pi1 x pi3) L(s - 1/2, pi3) L(s + 1/2, pi3) at one prime."""
    field = shape.pi1.field
    q = field.default_q(prime) if q is None else field.convert(q)
    spin = local_factor(param_satake_at_p(spin_shape_of_siegel(shape), prime, q), prime)
    c3 = shape.pi3.satake_at(prime)
    rhs = (
        local_factor(tensor_constituent(shape.pi1, shape.pi3).satake_at(prime), prime)
        * local_factor(c3.scale(field.half_power(q, 1)), prime)
        * local_factor(c3.scale(field.half_power(q, -1)), prime)
    )
    return spin.equals(rhs)
