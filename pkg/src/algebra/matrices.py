"""
8x8 matrices acting on octonion coordinates, and the orthogonal and
similitude predicates for the norm form.
"""
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Callable, List, Optional, Sequence

from sympy.polys.matrices import DomainMatrix

from src.algebra.octonion import DIM, Octonion, oct_bilinear, oct_norm, para_mul
from src.algebra.scalars import RATIONAL, ScalarField
from src.errors import IsotropicVector, NotASimilitude


@dataclass(frozen=True, eq=False)
class Mat8:
    """An 8x8 matrix over a scalar field, optionally carrying its similitude factor."""

    rep: DomainMatrix
    field: ScalarField = RATIONAL
    similitude: Optional[Any] = None

    def __post_init__(self):
        # sparse and dense DomainMatrix operands do not mix in matmul
        object.__setattr__(self, "rep", self.rep.to_dense())

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: ScalarField = RATIONAL, similitude=None) -> "Mat8":
        values = [[field.convert(v) for v in row] for row in rows]
        if len(values) != DIM or any(len(row) != DIM for row in values):
            raise ValueError("Mat8 needs 8 rows of 8 entries")
        return cls(DomainMatrix(values, (DIM, DIM), field.domain), field, similitude)

    @classmethod
    def from_columns(cls, columns: Sequence[Octonion], field: ScalarField = RATIONAL) -> "Mat8":
        rows = [[columns[j].coords[i] for j in range(DIM)] for i in range(DIM)]
        return cls(DomainMatrix(rows, (DIM, DIM), field.domain), field)

    @classmethod
    def from_linear_map(cls, fn: Callable[[Octonion], Octonion], field: ScalarField = RATIONAL) -> "Mat8":
        """Matrix whose j-th column is fn(e_j)."""
        return cls.from_columns([fn(Octonion.basis(j, field)) for j in range(DIM)], field)

    @classmethod
    def identity(cls, field: ScalarField = RATIONAL) -> "Mat8":
        return cls(DomainMatrix.eye(DIM, field.domain), field, field.one)

    @classmethod
    def scalar(cls, c, field: ScalarField = RATIONAL) -> "Mat8":
        return cls(DomainMatrix.eye(DIM, field.domain) * c, field, c * c)

    @cached_property
    def rows(self) -> List[List]:
        return self.rep.to_list()

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def column(self, j: int) -> Octonion:
        return Octonion(tuple(self.rows[i][j] for i in range(DIM)), self.field)

    def apply(self, x: Octonion) -> Octonion:
        self.field.require_same(x.field)
        rows = self.rows
        zero = self.field.zero
        out = []
        for i in range(DIM):
            acc = zero
            for m, c in zip(rows[i], x.coords):
                if m:
                    acc = acc + m * c
            out.append(acc)
        return Octonion(tuple(out), self.field)

    def __matmul__(self, other: "Mat8") -> "Mat8":
        self.field.require_same(other.field)
        sim = None
        if self.similitude is not None and other.similitude is not None:
            sim = self.similitude * other.similitude
        return Mat8(self.rep.matmul(other.rep), self.field, sim)

    def scale(self, c) -> "Mat8":
        sim = None if self.similitude is None else self.similitude * c * c
        return Mat8(self.rep * c, self.field, sim)

    def __neg__(self) -> "Mat8":
        return Mat8(-self.rep, self.field, self.similitude)

    def transpose(self) -> "Mat8":
        return Mat8(self.rep.transpose(), self.field)

    def inverse(self) -> "Mat8":
        sim = None if self.similitude is None else self.field.one / self.similitude
        return Mat8(self.rep.inv(), self.field, sim)

    def det(self):
        return self.rep.det()

    def equals(self, other: "Mat8") -> bool:
        if other.field.mode is not self.field.mode:
            return False
        eq = self.field.eq
        return all(eq(a, b) for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat8):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def is_identity(self) -> bool:
        return self.equals(Mat8.identity(self.field))

    def to_json(self) -> List[List]:
        return [[self.field.to_json(v) for v in row] for row in self.rows]


@lru_cache(maxsize=None)
def gram_matrix(field: ScalarField = RATIONAL) -> Mat8:
    """Gram matrix G_ij = b_N(e_i, e_j) of the polar form, computed from the model."""
    basis = [Octonion.basis(i, field) for i in range(DIM)]
    rows = [[oct_bilinear(x, y) for y in basis] for x in basis]
    return Mat8(DomainMatrix(rows, (DIM, DIM), field.domain), field)


def reflection(x: Octonion) -> Mat8:
    """sigma_x(y) = y - (b_N(x, y) / N(x)) x."""
    n = oct_norm(x)
    if x.field.is_zero(n):
        raise IsotropicVector(f"N(x) = 0 for x = {x.to_json()}")

    def sigma(y: Octonion) -> Octonion:
        return y - x.scale(oct_bilinear(x, y) / n)

    m = Mat8.from_linear_map(sigma, x.field)
    return Mat8(m.rep, m.field, x.field.one)


def left_para(x: Octonion) -> Mat8:
    """L_x(y) = x * y."""
    return Mat8.from_linear_map(lambda y: para_mul(x, y), x.field)


def right_para(x: Octonion) -> Mat8:
    """R_x(y) = y * x."""
    return Mat8.from_linear_map(lambda y: para_mul(y, x), x.field)


def _pulled_back_form(m: Mat8) -> Mat8:
    return m.transpose() @ gram_matrix(m.field) @ m


def similitude_factor(m: Mat8):
    """The lambda with M^T G M = lambda G, or NotASimilitude.

    A cached factor on ``m`` is checked against M^T G M, never trusted.
    """
    g = gram_matrix(m.field)
    h = _pulled_back_form(m)
    field = m.field
    if m.similitude is not None:
        lam = m.similitude
    else:
        i, j = next((i, j) for i in range(DIM) for j in range(DIM) if not field.is_zero(g.entry(i, j)))
        lam = h.entry(i, j) / g.entry(i, j)
    if not h.equals(g.scale(lam)):
        if m.similitude is not None:
            raise NotASimilitude(f"cached similitude {field.to_json(lam)} does not match M^T G M")
        raise NotASimilitude("M^T G M is not a multiple of G")
    return lam


def is_special_orthogonal(m: Mat8) -> bool:
    """M^T G M = G and det M = 1."""
    field = m.field
    if not _pulled_back_form(m).equals(gram_matrix(field)):
        return False
    return field.eq(m.det(), field.one)
