"""
Formal Arthur parameters: isobaric sums of cuspidal constituents tensored
with Arthur SL2 factors S_d.
"""
import logging
from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from src.algebra.scalars import RATIONAL, ScalarField
from src.errors import DegreeMismatch, MissingSatakeData, ScalarModeMismatch
from src.satake.embeddings import gsp4_to_gspin5
from src.satake.multisets import EigenMultiset
from src.satake.representations import std_eigen

logger = logging.getLogger(__name__)


class SelfDualType(str, Enum):
    ORTHOGONAL = "orthogonal"
    SYMPLECTIC = "symplectic"
    NONE = "none"


@dataclass(frozen=True, eq=False)
class CuspConstituent:
    """A labelled cuspidal constituent with user-supplied Satake data.

    ``everywhere`` holds data valid at every prime (the trivial constituent);
    otherwise ``satake`` maps primes to multisets of size ``degree``.
    """

    label: str
    degree: int
    selfdual: Optional[SelfDualType] = SelfDualType.ORTHOGONAL
    satake: Mapping[int, EigenMultiset] = dc_field(default_factory=dict)
    field: ScalarField = RATIONAL
    central_character: Optional[str] = None
    root_number: Optional[int] = None
    everywhere: Optional[EigenMultiset] = None

    def __post_init__(self):
        if self.degree < 1:
            raise DegreeMismatch(f"{self.label}: degree must be positive")
        if self.selfdual is SelfDualType.SYMPLECTIC and self.degree % 2:
            raise DegreeMismatch(f"{self.label}: symplectic constituents have even degree")
        if self.root_number not in (None, 1, -1):
            raise ValueError(f"{self.label}: root number must be +1 or -1")
        data = list(self.satake.items())
        if self.everywhere is not None:
            data.append(("*", self.everywhere))
        for p, m in data:
            if m.field.mode is not self.field.mode:
                raise ScalarModeMismatch(f"{self.label}: Satake data at p={p} is in {m.field.mode.value} mode")
            if len(m) != self.degree:
                raise DegreeMismatch(
                    f"{self.label}: Satake data at p={p} has {len(m)} eigenvalues, degree is {self.degree}"
                )

    @classmethod
    def from_values(
        cls,
        label: str,
        satake: Mapping[int, Iterable],
        selfdual: Optional[SelfDualType] = SelfDualType.ORTHOGONAL,
        field: ScalarField = RATIONAL,
        degree: Optional[int] = None,
        **kwargs,
    ) -> "CuspConstituent":
        data = {int(p): EigenMultiset.of(vals, field) for p, vals in satake.items()}
        if degree is None:
            degree = len(next(iter(data.values()))) if data else 1
        return cls(label, degree, selfdual, data, field, **kwargs)

    def has_data_at(self, prime: int) -> bool:
        return self.everywhere is not None or prime in self.satake

    def satake_at(self, prime: int) -> EigenMultiset:
        if self.everywhere is not None:
            return self.everywhere
        if prime not in self.satake:
            raise MissingSatakeData(self.label, prime)
        return self.satake[prime]

    def primes(self) -> List[int]:
        return sorted(self.satake)

    def to_json(self) -> dict:
        data = {
            "label": self.label,
            "degree": self.degree,
            "selfdual": self.selfdual.value if self.selfdual else None,
            "satake": {str(p): m.to_json() for p, m in sorted(self.satake.items())},
        }
        if self.everywhere is not None:
            data["everywhere"] = self.everywhere.to_json()
        if self.central_character is not None:
            data["central_character"] = self.central_character
        if self.root_number is not None:
            data["root_number"] = self.root_number
        return data


def trivial_constituent(field: ScalarField = RATIONAL) -> CuspConstituent:
    """The constituent 1: degree 1, orthogonal, Satake {1} everywhere."""
    return CuspConstituent(
        "1", 1, SelfDualType.ORTHOGONAL, {}, field, everywhere=EigenMultiset((field.one,), field), root_number=1
    )


def is_trivial(c: CuspConstituent) -> bool:
    return c.label == "1" and c.degree == 1


def _tensor_type(a: Optional[SelfDualType], b: Optional[SelfDualType]) -> Optional[SelfDualType]:
    if a is None or b is None:
        return None
    if SelfDualType.NONE in (a, b):
        return SelfDualType.NONE
    if a == b:
        return SelfDualType.ORTHOGONAL
    return SelfDualType.SYMPLECTIC


def tensor_constituent(a: CuspConstituent, b: CuspConstituent) -> CuspConstituent:
    """a (x) b with pairwise-product Satake data at the primes both carry."""
    a.field.require_same(b.field)
    if is_trivial(a):
        return b
    if is_trivial(b):
        return a
    primes = set(a.satake) | set(b.satake)
    data = {p: a.satake_at(p).tensor(b.satake_at(p)) for p in sorted(primes) if a.has_data_at(p) and b.has_data_at(p)}
    everywhere = None
    if a.everywhere is not None and b.everywhere is not None:
        everywhere = a.everywhere.tensor(b.everywhere)
    return CuspConstituent(
        f"{a.label}x{b.label}",
        a.degree * b.degree,
        _tensor_type(a.selfdual, b.selfdual),
        data,
        a.field,
        everywhere=everywhere,
    )


def sym2_constituent(pi: CuspConstituent) -> CuspConstituent:
    """Sym^2 pi normalized by the central character: {g1/g2, 1, g2/g1}."""
    if pi.degree != 2:
        raise DegreeMismatch(f"Sym^2 needs a degree-2 constituent, {pi.label} has degree {pi.degree}")
    field = pi.field

    def sym2(m: EigenMultiset) -> EigenMultiset:
        g1, g2 = m.values
        det = g1 * g2
        return EigenMultiset((g1 * g1 / det, field.one, g2 * g2 / det), field)

    return CuspConstituent(
        f"Sym2({pi.label})",
        3,
        SelfDualType.ORTHOGONAL,
        {p: sym2(m) for p, m in pi.satake.items()},
        field,
        root_number=1,
    )


def gsp4_std_constituent(pi: CuspConstituent) -> CuspConstituent:
    """Degree-5 std datum of a PGSp4 constituent from its degree-4 spin datum.

    Spin eigenvalues are read in the order (b1, b2, b3, b4) with
    b1 b4 = b2 b3; that product is the similitude, so its sign comes from
    the pairing and not from a square root of the full product.
    """
    if pi.degree != 4:
        raise DegreeMismatch(f"the GSp4 spin datum has degree 4, {pi.label} has degree {pi.degree}")
    field = pi.field

    def std(m: EigenMultiset) -> EigenMultiset:
        return std_eigen(gsp4_to_gspin5(m.values, field))

    return CuspConstituent(
        f"std({pi.label})",
        5,
        SelfDualType.ORTHOGONAL,
        {p: std(m) for p, m in pi.satake.items()},
        field,
    )


@dataclass(frozen=True)
class ArthurTerm:
    constituent: CuspConstituent
    d: int = 1

    @property
    def degree(self) -> int:
        return self.constituent.degree * self.d

    def key(self) -> Tuple[str, int]:
        return (self.constituent.label, self.d)


@dataclass(frozen=True)
class ArthurParam:
    """Isobaric sum of pi_i (x) S_{d_i}."""

    terms: Tuple[ArthurTerm, ...]

    @classmethod
    def of(cls, *pairs) -> "ArthurParam":
        return cls(tuple(ArthurTerm(c, d) for c, d in pairs))

    @property
    def degree(self) -> int:
        return sum(t.degree for t in self.terms)

    @property
    def field(self) -> ScalarField:
        return self.terms[0].constituent.field if self.terms else RATIONAL

    def __add__(self, other: "ArthurParam") -> "ArthurParam":
        return ArthurParam(self.terms + other.terms)

    def contains_trivial(self) -> bool:
        return any(is_trivial(t.constituent) and t.d == 1 for t in self.terms)

    def degrees(self) -> List[Tuple[int, int]]:
        return [(t.constituent.degree, t.d) for t in self.terms]

    def to_json(self) -> list:
        out = []
        for t in self.terms:
            entry = t.constituent.to_json()
            entry["d"] = t.d
            out.append(entry)
        return out


@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str
    pointer: str = ""

    def to_json(self) -> dict:
        return {"code": self.code, "message": self.message, "pointer": self.pointer}


def validate_param(
    p: ArthurParam,
    target_degree: int,
    discrete: bool,
    target_selfdual: SelfDualType = SelfDualType.ORTHOGONAL,
) -> List[Diagnostic]:
    """Structured diagnostics; an empty list means the parameter is valid."""
    diagnostics: List[Diagnostic] = []
    if p.degree != target_degree:
        diagnostics.append(
            Diagnostic("degree_sum", f"total degree {p.degree} does not match target degree {target_degree}")
        )

    seen: Dict[Tuple[str, int], int] = {}
    for k, term in enumerate(p.terms):
        c = term.constituent
        if term.d < 1:
            diagnostics.append(Diagnostic("arthur_sl2", f"S_d needs d >= 1, got {term.d}", f"/{k}/d"))
        if discrete:
            if c.selfdual in (None, SelfDualType.NONE):
                diagnostics.append(
                    Diagnostic("selfdual_parity", f"{c.label} must be self-dual in a discrete parameter", f"/{k}/selfdual")
                )
            else:
                same = term.d % 2 == 1
                expected = target_selfdual if same else _opposite(target_selfdual)
                if c.selfdual is not expected:
                    diagnostics.append(
                        Diagnostic(
                            "selfdual_parity",
                            f"{c.label} with d={term.d} must be {expected.value}, is {c.selfdual.value}",
                            f"/{k}/selfdual",
                        )
                    )
            if term.key() in seen:
                diagnostics.append(
                    Diagnostic(
                        "not_multiplicity_free",
                        f"({c.label}, S_{term.d}) repeats term {seen[term.key()]}",
                        f"/{k}",
                    )
                )
            else:
                seen[term.key()] = k
    return diagnostics


def _opposite(t: SelfDualType) -> SelfDualType:
    return SelfDualType.SYMPLECTIC if t is SelfDualType.ORTHOGONAL else SelfDualType.ORTHOGONAL


def arthur_sl2_chain(d: int, q, field: ScalarField) -> EigenMultiset:
    """{q^{(d-1)/2}, q^{(d-3)/2}, ..., q^{-(d-1)/2}}."""
    if d == 1:
        return EigenMultiset((field.one,), field)
    return EigenMultiset((field.half_power(q, d - 1 - 2 * j) for j in range(d)), field)


def param_satake_at_p(p: ArthurParam, prime: int, q=None) -> EigenMultiset:
    """Disjoint union over terms of c(pi_i)_p (x) S_{d_i}(q)."""
    field = p.field
    if q is None and any(t.d > 1 for t in p.terms):
        q = field.default_q(prime)
    elif q is not None:
        q = field.convert(q)
    total = EigenMultiset((), field)
    for term in p.terms:
        c = term.constituent.satake_at(prime)
        total = total + c.tensor(arthur_sl2_chain(term.d, q, field))
    return total
