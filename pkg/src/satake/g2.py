"""
The G2 criterion for PGSp6 parameters.

A rank-3 parameter with mu^2 x1 x2 x3 = 1 is of G2 type exactly when 1 is a
spin eigenvalue; then spin = {1} + std.
"""
from src.errors import NotPGSp6Param, WrongRank
from src.satake.multisets import EigenMultiset
from src.satake.representations import spin_eigen, std_eigen
from src.satake.torus import GSpinOddParam


def require_pgsp6(c: GSpinOddParam) -> GSpinOddParam:
    if not isinstance(c, GSpinOddParam) or c.n != 3:
        raise WrongRank("the G2 criterion is stated for rank-3 GSpinOdd parameters")
    if not c.field.eq(c.central_character(), c.field.one):
        raise NotPGSp6Param("mu^2 x1 x2 x3 must equal 1")
    return c


def g2_test(c: GSpinOddParam) -> bool:
    require_pgsp6(c)
    return spin_eigen(c).contains(c.field.one)


def g2_decomposition(c: GSpinOddParam) -> EigenMultiset:
    """{1} + std(c), the spin multiset of a G2-type parameter."""
    return EigenMultiset((c.field.one,), c.field) + std_eigen(c)


def spin_splits_off_one(c: GSpinOddParam) -> bool:
    """spin(c) = {1} + std(c) as multisets."""
    require_pgsp6(c)
    return spin_eigen(c) == g2_decomposition(c)
