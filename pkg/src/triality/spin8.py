"""
Spin(8) as triples (g1, g2, g3) of special orthogonal maps of the
para-octonions with g1(x * y) = g2(x) * g3(y).

Triality rotates the triple: theta(g1, g2, g3) = (g2, g3, g1), so that
rho_j(theta(a)) = rho_{j+1}(a).
"""
import itertools
import logging
from dataclasses import dataclass, field as dc_field
from functools import cached_property, lru_cache
from typing import FrozenSet, List, Optional, Tuple

from sympy.polys.matrices import DomainMatrix

from src.algebra.matrices import Mat8, is_special_orthogonal, reflection
from src.algebra.octonion import DIM, Octonion, oct_conj, oct_mul, oct_norm, para_mul
from src.algebra.scalars import RATIONAL, ScalarField
from src.errors import InvalidTriple, IsotropicVector, NotASquare, SpinorNormObstruction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RelationFailure:
    """One failed check: orthogonality or determinant of a component, or a basis relation."""

    kind: str
    component: Optional[int] = None
    pair: Optional[Tuple[int, int]] = None

    def describe(self) -> str:
        if self.kind == "relation":
            i, j = self.pair
            return f"g1(e{i} * e{j}) != g2(e{i}) * g3(e{j})"
        return f"g{self.component} fails the {self.kind} check"


@dataclass(frozen=True, eq=False)
class SpinTriple:
    g1: Mat8
    g2: Mat8
    g3: Mat8
    trusted: bool = dc_field(default=False, repr=False)

    def __post_init__(self):
        self.g1.field.require_same(self.g2.field)
        self.g1.field.require_same(self.g3.field)

    @classmethod
    def identity(cls, scalars: ScalarField = RATIONAL) -> "SpinTriple":
        eye = Mat8.identity(scalars)
        return cls(eye, eye, eye, trusted=True)

    @property
    def field(self) -> ScalarField:
        return self.g1.field

    @property
    def components(self) -> Tuple[Mat8, Mat8, Mat8]:
        return (self.g1, self.g2, self.g3)

    @cached_property
    def failures(self) -> List[RelationFailure]:
        if self.trusted:
            return []
        return spin_relation_failures(self.g1, self.g2, self.g3)

    @property
    def is_valid(self) -> bool:
        return not self.failures

    def equals(self, other: "SpinTriple") -> bool:
        return all(a.equals(b) for a, b in zip(self.components, other.components))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpinTriple):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def __mul__(self, other: "SpinTriple") -> "SpinTriple":
        return spin_mul(self, other)

    def to_json(self) -> dict:
        return {"g1": self.g1.to_json(), "g2": self.g2.to_json(), "g3": self.g3.to_json()}


@dataclass(frozen=True)
class CenterElement:
    """(e1 I, e2 I, e3 I) with e1 = e2 e3."""

    signs: Tuple[int, int, int]

    @property
    def is_identity(self) -> bool:
        return self.signs == (1, 1, 1)

    @property
    def label(self) -> Optional[int]:
        """The j with rho_j(e) = I, for the three nontrivial elements."""
        if self.is_identity:
            return None
        return self.signs.index(1) + 1

    def theta(self) -> "CenterElement":
        e1, e2, e3 = self.signs
        return CenterElement((e2, e3, e1))

    def to_triple(self, scalars: ScalarField = RATIONAL) -> SpinTriple:
        mats = [Mat8.scalar(scalars.rational(s), scalars) for s in self.signs]
        e1, e2, e3 = self.signs
        return SpinTriple(*mats, trusted=(e1 == e2 * e3))

    def to_json(self) -> dict:
        return {"signs": list(self.signs), "label": self.label}


def nontrivial_center() -> Tuple[CenterElement, CenterElement, CenterElement]:
    """The set E, ordered by label."""
    return (CenterElement((1, -1, -1)), CenterElement((-1, 1, -1)), CenterElement((-1, -1, 1)))


def center_by_label(label: int) -> CenterElement:
    return nontrivial_center()[label - 1]


@lru_cache(maxsize=None)
def _basis_para_products(scalars: ScalarField) -> DomainMatrix:
    """8 x 64 matrix whose column 8i+j holds e_i * e_j."""
    basis = [Octonion.basis(i, scalars) for i in range(DIM)]
    columns = [para_mul(x, y).coords for x in basis for y in basis]
    rows = [[col[r] for col in columns] for r in range(DIM)]
    return DomainMatrix(rows, (DIM, DIM * DIM), scalars.domain)


def spin_relation_failures(g1: Mat8, g2: Mat8, g3: Mat8, first_only: bool = False) -> List[RelationFailure]:
    """Every failed check for the candidate triple, in a fixed order."""
    failures: List[RelationFailure] = []
    for k, g in enumerate((g1, g2, g3), start=1):
        if not is_special_orthogonal(g):
            failures.append(RelationFailure("orthogonality", component=k))
            if first_only:
                return failures

    scalars = g1.field
    lhs = g1.rep.matmul(_basis_para_products(scalars)).to_list()
    cols2 = [g2.column(i) for i in range(DIM)]
    cols3 = [g3.column(j) for j in range(DIM)]
    for i in range(DIM):
        for j in range(DIM):
            rhs = para_mul(cols2[i], cols3[j]).coords
            col = DIM * i + j
            if not all(scalars.eq(lhs[r][col], rhs[r]) for r in range(DIM)):
                failures.append(RelationFailure("relation", pair=(i, j)))
                if first_only:
                    return failures
    return failures


def is_spin_triple(g1: Mat8, g2: Mat8, g3: Mat8) -> bool:
    return not spin_relation_failures(g1, g2, g3, first_only=True)


def _require_valid(a: SpinTriple) -> SpinTriple:
    if not a.is_valid:
        raise InvalidTriple(a.failures[0].describe())
    return a


def spin_mul(a: SpinTriple, b: SpinTriple) -> SpinTriple:
    _require_valid(a)
    _require_valid(b)
    return SpinTriple(a.g1 @ b.g1, a.g2 @ b.g2, a.g3 @ b.g3, trusted=True)


def spin_inv(a: SpinTriple) -> SpinTriple:
    _require_valid(a)
    return SpinTriple(a.g1.inverse(), a.g2.inverse(), a.g3.inverse(), trusted=True)


def triality_theta(a: SpinTriple) -> SpinTriple:
    _require_valid(a)
    return SpinTriple(a.g2, a.g3, a.g1, trusted=True)


def rho(j: int, a: SpinTriple) -> Mat8:
    """The projection rho_j(a) = g_j."""
    if j not in (1, 2, 3):
        raise ValueError(f"rho index must be 1, 2 or 3, got {j}")
    _require_valid(a)
    g = a.components[j - 1]
    return Mat8(g.rep, g.field, g.field.one)


def is_triality_fixed(a: SpinTriple) -> bool:
    _require_valid(a)
    return a.g1.equals(a.g2) and a.g2.equals(a.g3)


def lift_reflection_pair(x: Octonion, y: Octonion) -> SpinTriple:
    """Lift sigma_x sigma_y to Spin(8).

    With c = sqrt(N(x) N(y)), the Moufang identity a(zw)a = (az)(wa) gives

        g2(z) = ((z y) conj(x)) / c,    g3(z) = conj(x) (y z) / c.

    The lift exists over the field only when N(x) N(y) is a square.
    """
    scalars = x.field
    scalars.require_same(y.field)
    nx, ny = oct_norm(x), oct_norm(y)
    if scalars.is_zero(nx) or scalars.is_zero(ny):
        raise IsotropicVector("reflection pairs need anisotropic vectors")
    try:
        c = scalars.sqrt(nx * ny)
    except NotASquare:
        raise SpinorNormObstruction(
            f"N(x) N(y) = {scalars.to_json(nx * ny)} is not a square; sigma_x sigma_y has no lift over this field"
        )
    inv_c = scalars.one / c
    xbar = oct_conj(x)

    g1 = reflection(x) @ reflection(y)
    g2 = Mat8.from_linear_map(lambda z: oct_mul(oct_mul(z, y), xbar).scale(inv_c), scalars)
    g3 = Mat8.from_linear_map(lambda z: oct_mul(xbar, oct_mul(y, z)).scale(inv_c), scalars)
    logger.debug("lifted reflection pair with spinor norm root %s", scalars.to_json(c))
    one = scalars.one
    return SpinTriple(g1, Mat8(g2.rep, scalars, one), Mat8(g3.rep, scalars, one))


def center_enumerate(scalars: ScalarField = RATIONAL) -> FrozenSet[CenterElement]:
    """Scan the 8 sign patterns and keep those satisfying the Spin relation."""
    members = set()
    for signs in itertools.product((1, -1), repeat=3):
        candidate = CenterElement(signs)
        t = candidate.to_triple(scalars)
        if is_spin_triple(t.g1, t.g2, t.g3):
            members.add(candidate)
    return frozenset(members)


def kernel_of_rho(j: int, scalars: ScalarField = RATIONAL) -> FrozenSet[CenterElement]:
    return frozenset(c for c in center_enumerate(scalars) if c.signs[j - 1] == 1)
