"""
Split octonions in the Zorn vector-matrix model.

An element is (a, v; w, b) with a, b scalars and v, w 3-vectors. The
coordinate order is frozen as

    (a, v1, v2, v3, w1, w2, w3, b)

so the basis is e = (1,0;0,0), u1..u3 = (0,e_i;0,0), u1*..u3* = (0,0;e_i,0)
and e' = (0,0;0,1), with 1 = e + e'.

Product:
    (a1,v1;w1,b1)(a2,v2;w2,b2) =
        (a1 a2 + v1.w2,  a1 v2 + b2 v1 - w1 x w2;
         a2 w1 + b1 w2 + v1 x v2,  b1 b2 + w1.v2)

Norm N(x) = ab - v.w, conjugate (b, -v; -w, a), para product x*y = conj(x) conj(y).
"""
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from src.algebra.scalars import RATIONAL, ScalarField

DIM = 8


def _dot(v, w):
    return v[0] * w[0] + v[1] * w[1] + v[2] * w[2]


def _cross(v, w):
    return (
        v[1] * w[2] - v[2] * w[1],
        v[2] * w[0] - v[0] * w[2],
        v[0] * w[1] - v[1] * w[0],
    )


@dataclass(frozen=True, eq=False)
class Octonion:
    """Split octonion with exact (or tolerant complex) coordinates."""

    coords: Tuple
    field: ScalarField = RATIONAL

    def __post_init__(self):
        if len(self.coords) != DIM:
            raise ValueError(f"an octonion has {DIM} coordinates, got {len(self.coords)}")

    @classmethod
    def from_values(cls, values: Iterable, field: ScalarField = RATIONAL) -> "Octonion":
        return cls(tuple(field.convert(v) for v in values), field)

    @classmethod
    def zero(cls, field: ScalarField = RATIONAL) -> "Octonion":
        return cls((field.zero,) * DIM, field)

    @classmethod
    def one(cls, field: ScalarField = RATIONAL) -> "Octonion":
        return cls.basis(0, field) + cls.basis(7, field)

    @classmethod
    def basis(cls, i: int, field: ScalarField = RATIONAL) -> "Octonion":
        return cls(tuple(field.one if j == i else field.zero for j in range(DIM)), field)

    @classmethod
    def from_parts(cls, a, v: Sequence, w: Sequence, b, field: ScalarField) -> "Octonion":
        return cls((a, v[0], v[1], v[2], w[0], w[1], w[2], b), field)

    @property
    def a(self):
        return self.coords[0]

    @property
    def v(self):
        return self.coords[1:4]

    @property
    def w(self):
        return self.coords[4:7]

    @property
    def b(self):
        return self.coords[7]

    def _check(self, other: "Octonion"):
        self.field.require_same(other.field)

    def __add__(self, other: "Octonion") -> "Octonion":
        self._check(other)
        return Octonion(tuple(x + y for x, y in zip(self.coords, other.coords)), self.field)

    def __sub__(self, other: "Octonion") -> "Octonion":
        self._check(other)
        return Octonion(tuple(x - y for x, y in zip(self.coords, other.coords)), self.field)

    def __neg__(self) -> "Octonion":
        return Octonion(tuple(-x for x in self.coords), self.field)

    def scale(self, c) -> "Octonion":
        return Octonion(tuple(c * x for x in self.coords), self.field)

    def __mul__(self, other: "Octonion") -> "Octonion":
        return oct_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Octonion) or other.field.mode is not self.field.mode:
            return NotImplemented
        return all(self.field.eq(x, y) for x, y in zip(self.coords, other.coords))

    def __hash__(self):
        return hash(tuple(self.field.canonical(x) for x in self.coords))

    def is_zero(self) -> bool:
        return all(self.field.is_zero(x) for x in self.coords)

    def to_json(self) -> list:
        return [self.field.to_json(x) for x in self.coords]

    def __repr__(self) -> str:
        return f"Octonion({', '.join(map(str, self.to_json()))})"


def oct_mul(x: Octonion, y: Octonion) -> Octonion:
    """Zorn product x·y."""
    x._check(y)
    a1, v1, w1, b1 = x.a, x.v, x.w, x.b
    a2, v2, w2, b2 = y.a, y.v, y.w, y.b
    cw = _cross(w1, w2)
    cv = _cross(v1, v2)
    return Octonion.from_parts(
        a1 * a2 + _dot(v1, w2),
        [a1 * v2[i] + b2 * v1[i] - cw[i] for i in range(3)],
        [a2 * w1[i] + b1 * w2[i] + cv[i] for i in range(3)],
        b1 * b2 + _dot(w1, v2),
        x.field,
    )


def oct_conj(x: Octonion) -> Octonion:
    return Octonion.from_parts(x.b, [-c for c in x.v], [-c for c in x.w], x.a, x.field)


def oct_norm(x: Octonion):
    return x.a * x.b - _dot(x.v, x.w)


def oct_bilinear(x: Octonion, y: Octonion):
    """Polar form b_N(x, y) = N(x+y) - N(x) - N(y), expanded."""
    x._check(y)
    return x.a * y.b + y.a * x.b - _dot(x.v, y.w) - _dot(y.v, x.w)


def para_mul(x: Octonion, y: Octonion) -> Octonion:
    """Para-octonion product x * y = conj(x)·conj(y)."""
    return oct_mul(oct_conj(x), oct_conj(y))
