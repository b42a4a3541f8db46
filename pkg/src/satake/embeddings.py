"""
Torus forms of the spin embeddings.

Frozen monomial assignments (c1 = (x; m1), c2 = (y; m2)):

- OddOdd        GSpin_{2a+1} x GSpin_{2b+1} -> GSpin_{2(a+b+1)}:  (x, y, 1; m1 m2)
- OddEvenToOdd  GSpin_{2a+1} x GSpin_{2b}   -> GSpin_{2(a+b)+1}:  (x, y; m1 m2)
- EvenEven      GSpin_{2a}   x GSpin_{2b}   -> GSpin_{2(a+b)}:    (x, y; m1 m2)

The branching identities they satisfy:

- OddOdd: both half-spins of the output are spin(c1) (x) spin(c2)
- OddEvenToOdd: spin = spin(c1) (x) (halfspin+(c2) + halfspin-(c2))
- EvenEven: halfspin+ = hs+ (x) hs+ + hs- (x) hs-, halfspin- = hs+ (x) hs- + hs- (x) hs+

and std of the output is std(c1) + std(c2) in every case.
"""
from enum import Enum
from typing import Sequence

from src.algebra.scalars import ScalarField
from src.errors import DeterminantMismatch, RankMismatch, WrongRank
from src.satake.multisets import EigenMultiset
from src.satake.torus import GSpinEvenParam, GSpinOddParam, GSpinParam


class EmbeddingCase(str, Enum):
    ODD_ODD = "OddOdd"
    EVEN_EVEN = "EvenEven"
    ODD_EVEN_TO_ODD = "OddEvenToOdd"


def iota_7to8(c: GSpinOddParam) -> GSpinEvenParam:
    """GSpin7 -> GSpin8: (x1, x2, x3; mu) -> (x1, x2, x3, 1; mu)."""
    if not isinstance(c, GSpinOddParam) or c.n != 3:
        raise WrongRank(f"iota_7to8 needs a rank-3 GSpinOdd parameter, got n={c.n}")
    return GSpinEvenParam(4, tuple(c.chi) + (c.field.one,), c.mu, c.field)


def embed_spin_torus(case: EmbeddingCase, c1: GSpinParam, c2: GSpinParam) -> GSpinParam:
    case = EmbeddingCase(case)
    c1.field.require_same(c2.field)
    mu = c1.mu * c2.mu
    if case is EmbeddingCase.ODD_ODD:
        if not (isinstance(c1, GSpinOddParam) and isinstance(c2, GSpinOddParam)):
            raise RankMismatch("OddOdd embeds two GSpinOdd parameters")
        chi = tuple(c1.chi) + tuple(c2.chi) + (c1.field.one,)
        return GSpinEvenParam(len(chi), chi, mu, c1.field)
    if case is EmbeddingCase.ODD_EVEN_TO_ODD:
        if not (isinstance(c1, GSpinOddParam) and isinstance(c2, GSpinEvenParam)):
            raise RankMismatch("OddEvenToOdd embeds a GSpinOdd and a GSpinEven parameter, in that order")
        chi = tuple(c1.chi) + tuple(c2.chi)
        return GSpinOddParam(len(chi), chi, mu, c1.field)
    if not (isinstance(c1, GSpinEvenParam) and isinstance(c2, GSpinEvenParam)):
        raise RankMismatch("EvenEven embeds two GSpinEven parameters")
    chi = tuple(c1.chi) + tuple(c2.chi)
    return GSpinEvenParam(len(chi), chi, mu, c1.field)


def _pair(values: EigenMultiset, name: str, size: int = 2):
    if len(values) != size:
        raise RankMismatch(f"{name} must have {size} eigenvalues, got {len(values)}")
    return values.values


def gl2_to_gspin3(c: EigenMultiset) -> GSpinOddParam:
    """{g1, g2} -> (g1/g2; g2), whose spin multiset is {g1, g2}."""
    g1, g2 = _pair(c, "C")
    return GSpinOddParam(1, (g1 / g2,), g2, c.field)


def gl2_pair_to_gspin4(a: EigenMultiset, b: EigenMultiset) -> GSpinEvenParam:
    """(A, B) with a1 a2 = b1 b2 -> (b1/a1, b2/a1; a1): halfspin+ = A, halfspin- = B."""
    a1, a2 = _pair(a, "A")
    b1, b2 = _pair(b, "B")
    field = a.field
    if not field.eq(a1 * a2, b1 * b2):
        raise DeterminantMismatch("GL2 pair needs det A = det B")
    return GSpinEvenParam(2, (b1 / a1, b2 / a1), a1, field)


def gsp4_to_gspin5(values: Sequence, field: ScalarField) -> GSpinOddParam:
    """(b1, b2, b3, b4) with b1 b4 = b2 b3 -> (b2/b1, b3/b1; b1), whose spin multiset is {b1..b4}."""
    if len(values) != 4:
        raise RankMismatch(f"a GSp4 spin parameter has 4 eigenvalues, got {len(values)}")
    b1, b2, b3, b4 = values
    if not field.eq(b1 * b4, b2 * b3):
        raise DeterminantMismatch("GSp4 eigenvalues must pair as b1 b4 = b2 b3")
    return GSpinOddParam(2, (b2 / b1, b3 / b1), b1, field)


def nu_embed(a: EigenMultiset, b: EigenMultiset, c: EigenMultiset) -> GSpinOddParam:
    """GSpin4 x GSpin3 -> GSpin7 on GL2 data: (b1/a1, g1/g2, b2/a1; a1 g2).

    spin = (A + B) (x) C and std = A (x) B^{-1} + Sym^2 C / det C.
    """
    a1, _ = _pair(a, "A")
    b1, b2 = _pair(b, "B")
    g1, g2 = _pair(c, "C")
    gl2_pair_to_gspin4(a, b)
    return GSpinOddParam(3, (b1 / a1, g1 / g2, b2 / a1), a1 * g2, a.field)
