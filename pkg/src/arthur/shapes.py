"""
Siegel-type shapes, their standard and spin Arthur parameters, the variant
shapes of the theta-lift constructions, the Rankin-Selberg tensor and the
remixing of two GL2 x GL2 tensor products.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

from src.arthur.params import (
    ArthurParam,
    CuspConstituent,
    SelfDualType,
    gsp4_std_constituent,
    param_satake_at_p,
    sym2_constituent,
    tensor_constituent,
    trivial_constituent,
)
from src.errors import CentralCharacterMismatch, DegreeMismatch, ShapeInvalid, SizeMismatch
from src.satake.embeddings import (
    EmbeddingCase,
    embed_spin_torus,
    gl2_pair_to_gspin4,
    gl2_to_gspin3,
    gsp4_to_gspin5,
)
from src.satake.multisets import EigenMultiset
from src.satake.representations import PLUS, halfspin_eigen

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GenericCuspidal:
    """A cuspidal standard parameter pi of degree 7; ``spin`` optionally carries the degree-8 lift's data."""

    pi: CuspConstituent
    g2: bool = False
    spin: Optional[CuspConstituent] = None


@dataclass(frozen=True)
class EndoscopicTempered:
    """(pi1 (x) pi2) + Sym^2 pi3 with pi1 != pi2."""

    pi1: CuspConstituent
    pi2: CuspConstituent
    pi3: CuspConstituent


@dataclass(frozen=True)
class NonTempered:
    """pi1 (x) S_2 + Sym^2 pi3."""

    pi1: CuspConstituent
    pi3: CuspConstituent


SiegelStdShape = Union[GenericCuspidal, EndoscopicTempered, NonTempered]


def _require_degree(c: CuspConstituent, degree: int, role: str, error=ShapeInvalid):
    if c.degree != degree:
        raise error(f"{role} must have degree {degree}, {c.label} has degree {c.degree}")


def validate_shape(s: SiegelStdShape) -> SiegelStdShape:
    if isinstance(s, GenericCuspidal):
        _require_degree(s.pi, 7, "the cuspidal constituent")
        if s.spin is not None:
            _require_degree(s.spin, 8, "the spin constituent")
    elif isinstance(s, EndoscopicTempered):
        for role, c in (("pi1", s.pi1), ("pi2", s.pi2), ("pi3", s.pi3)):
            _require_degree(c, 2, role)
        if s.pi1.label == s.pi2.label:
            raise ShapeInvalid("the endoscopic shape needs pi1 != pi2")
    elif isinstance(s, NonTempered):
        _require_degree(s.pi1, 2, "pi1")
        _require_degree(s.pi3, 2, "pi3")
    else:
        raise ShapeInvalid(f"unknown Siegel shape {type(s).__name__}")
    return s


def std_shape_param(s: SiegelStdShape) -> ArthurParam:
    """The degree-7 standard parameter of a Siegel shape."""
    validate_shape(s)
    if isinstance(s, GenericCuspidal):
        return ArthurParam.of((s.pi, 1))
    if isinstance(s, EndoscopicTempered):
        return ArthurParam.of((tensor_constituent(s.pi1, s.pi2), 1), (sym2_constituent(s.pi3), 1))
    return ArthurParam.of((s.pi1, 2), (sym2_constituent(s.pi3), 1))


def spin_shape_of_siegel(s: SiegelStdShape) -> ArthurParam:
    """The degree-8 spin parameter.

    EndoscopicTempered -> (pi1 (x) pi3) + (pi2 (x) pi3)
    NonTempered        -> (pi1 (x) pi3) + pi3 (x) S_2
    GenericCuspidal    -> 1 + pi when of G2 type, otherwise one cuspidal constituent of degree 8
    """
    validate_shape(s)
    if isinstance(s, EndoscopicTempered):
        param = ArthurParam.of((tensor_constituent(s.pi1, s.pi3), 1), (tensor_constituent(s.pi2, s.pi3), 1))
    elif isinstance(s, NonTempered):
        param = ArthurParam.of((tensor_constituent(s.pi1, s.pi3), 1), (s.pi3, 2))
    elif s.g2:
        param = ArthurParam.of((trivial_constituent(s.pi.field), 1), (s.pi, 1))
    else:
        spin = s.spin or CuspConstituent(f"spin({s.pi.label})", 8, SelfDualType.ORTHOGONAL, {}, s.pi.field)
        param = ArthurParam.of((spin, 1))
    if param.degree != 8:
        raise ShapeInvalid(f"spin parameter has degree {param.degree}")
    logger.debug("spin shape of %s: degrees %s", type(s).__name__, param.degrees())
    return param


class VariantSource(str, Enum):
    PGSP2 = "PGSp2"
    PGSP4 = "PGSp4"


@dataclass(frozen=True)
class VariantShapes:
    f1: ArthurParam
    f2: ArthurParam


def variant_shape(
    source: VariantSource,
    spin: CuspConstituent,
    std: Optional[CuspConstituent] = None,
) -> VariantShapes:
    """SO8 parameters of the two pullbacks for a form on PGSp2 or PGSp4.

    PGSp2: f1 = Psi(3) + S_5, f2 = pi(2) (x) S_4
    PGSp4: f1 = Psi(5) + S_3, f2 = Psi(4) (x) S_2

    ``spin`` is the degree 2 (PGSp2) or 4 (PGSp4) datum; ``std`` the degree 3
    or 5 datum, derived from ``spin`` when omitted.
    """
    source = VariantSource(source)
    if source is VariantSource.PGSP2:
        _require_degree(spin, 2, "the PGSp2 spin datum", DegreeMismatch)
        std = std or sym2_constituent(spin)
        _require_degree(std, 3, "the PGSp2 std datum", DegreeMismatch)
        trivial_d, spin_d = 5, 4
    else:
        _require_degree(spin, 4, "the PGSp4 spin datum", DegreeMismatch)
        std = std or gsp4_std_constituent(spin)
        _require_degree(std, 5, "the PGSp4 std datum", DegreeMismatch)
        trivial_d, spin_d = 3, 2
    trivial = trivial_constituent(spin.field)
    return VariantShapes(
        f1=ArthurParam.of((std, 1), (trivial, trivial_d)),
        f2=ArthurParam.of((spin, spin_d)),
    )


def rankin_selberg_tensor(c2: EigenMultiset, c4: EigenMultiset) -> EigenMultiset:
    """All 8 pairwise products."""
    if len(c2) != 2 or len(c4) != 4:
        raise SizeMismatch(f"expected sizes 2 and 4, got {len(c2)} and {len(c4)}")
    return c2.tensor(c4)


def rankin_selberg_embedding_route(c2: EigenMultiset, c4: EigenMultiset) -> Tuple[EigenMultiset, EigenMultiset]:
    """Both half-spins of the GSpin3 x GSpin5 -> GSpin8 embedding on matched data.

    ``c4`` is ordered (b1, b2, b3, b4) with b1 b4 = b2 b3.
    """
    embedded = embed_spin_torus(
        EmbeddingCase.ODD_ODD,
        gl2_to_gspin3(c2),
        gsp4_to_gspin5(c4.values, c4.field),
    )
    return halfspin_eigen(embedded, "+"), halfspin_eigen(embedded, "-")


@dataclass(frozen=True)
class RemixResult:
    before: ArthurParam
    after: ArthurParam


def remix(
    heart: CuspConstituent,
    diamond: CuspConstituent,
    spade: CuspConstituent,
    club: CuspConstituent,
) -> RemixResult:
    """(heart (x) diamond) + (spade (x) club)  ->  (heart (x) spade) + (diamond (x) club)."""
    if heart.central_character != diamond.central_character:
        raise CentralCharacterMismatch(
            f"central characters of {heart.label} and {diamond.label} differ: "
            f"{heart.central_character} vs {diamond.central_character}"
        )
    if spade.central_character != club.central_character:
        raise CentralCharacterMismatch(
            f"central characters of {spade.label} and {club.label} differ: "
            f"{spade.central_character} vs {club.central_character}"
        )
    for c in (heart, diamond, spade, club):
        _require_degree(c, 2, "a remix constituent", DegreeMismatch)
    before = ArthurParam.of((tensor_constituent(heart, diamond), 1), (tensor_constituent(spade, club), 1))
    after = ArthurParam.of((tensor_constituent(heart, spade), 1), (tensor_constituent(diamond, club), 1))
    return RemixResult(before, after)


def remix_embedding_route(
    heart: CuspConstituent,
    diamond: CuspConstituent,
    spade: CuspConstituent,
    club: CuspConstituent,
    prime: int,
) -> EigenMultiset:
    """halfspin+ of the EvenEven embedding of GSpin4(heart, diamond) x GSpin4(spade, club) at a prime."""
    left = gl2_pair_to_gspin4(heart.satake_at(prime), diamond.satake_at(prime))
    right = gl2_pair_to_gspin4(spade.satake_at(prime), club.satake_at(prime))
    return halfspin_eigen(embed_spin_torus(EmbeddingCase.EVEN_EVEN, left, right), PLUS)


def evaluate_remix(result: RemixResult, prime: int) -> Tuple[EigenMultiset, EigenMultiset]:
    return param_satake_at_p(result.before, prime), param_satake_at_p(result.after, prime)
