"""
Unramified theta correspondence on Satake parameters.

The principal SL2 gives the trivial representation of GSpin_{2n+1} the
parameter ((q^n, ..., q); q^{-n(n+1)/4}). The theta lift from GSpin_{2n+1}
to GSpin_{2m} sends c to the OddOdd embedding of c and the trivial
parameter of rank m-n-1.
"""
import logging
from typing import Sequence, Tuple

from src.algebra.scalars import RATIONAL, ScalarField, ScalarMode
from src.errors import MissingScalar, RankTooSmall
from src.satake.embeddings import EmbeddingCase, embed_spin_torus
from src.satake.multisets import EigenMultiset
from src.satake.representations import std_eigen
from src.satake.torus import GSpinEvenParam, GSpinOddParam

logger = logging.getLogger(__name__)


def _resolve_q(q, field: ScalarField):
    if q is not None:
        return field.convert(q)
    if field.mode is ScalarMode.QHALF:
        return field.u**2
    raise MissingScalar("q is required outside qhalf mode")


def satake_of_trivial(n: int, q=None, field: ScalarField = RATIONAL) -> GSpinOddParam:
    """((q^n, ..., q); q^{-n(n+1)/4}); q defaults to u^2 in qhalf mode."""
    if n < 0:
        raise ValueError("rank must be non-negative")
    if n == 0:
        return GSpinOddParam.ones(0, field)
    q = _resolve_q(q, field)
    chi = tuple(field.power(q, k) for k in range(n, 0, -1))
    mu = field.half_power(q, -(n * (n + 1)) // 2)
    return GSpinOddParam(n, chi, mu, field)


def theta_satake(c: GSpinOddParam, m: int, q=None) -> GSpinEvenParam:
    """(x_1..x_n, q^{m-n-1}, ..., q, 1; mu q^{-(m-n)(m-n-1)/4})."""
    if m <= c.n:
        raise RankTooSmall(f"theta lift to GSpin_{2 * m} needs m > n = {c.n}")
    trivial = satake_of_trivial(m - c.n - 1, q, c.field)
    lifted = embed_spin_torus(EmbeddingCase.ODD_ODD, c, trivial)
    logger.debug("theta lift n=%d -> m=%d", c.n, m)
    return lifted


def theta_std_expected(c: GSpinOddParam, m: int, q=None) -> EigenMultiset:
    """std(c) + {q^{+-(m-n-1)}, ..., q^{+-1}, 1}: the standard side of the commuting square."""
    return std_eigen(c) + std_eigen(satake_of_trivial(m - c.n - 1, q, c.field))


def project_to_so(c) -> Tuple:
    """Image in the SO torus (the similitude coordinate is forgotten)."""
    return tuple(c.chi)


def iota_flat(t: Sequence, m: int, q=None, field: ScalarField = RATIONAL) -> Tuple:
    """SO_{2n+1} torus -> SO_{2m} torus: t -> (t, q^{m-n-1}, ..., q, 1)."""
    n = len(t)
    if m <= n:
        raise RankTooSmall(f"theta lift to SO_{2 * m} needs m > n = {n}")
    if m - n - 1 == 0:
        return tuple(t) + (field.one,)
    q = _resolve_q(q, field)
    return tuple(t) + tuple(field.power(q, k) for k in range(m - n - 1, 0, -1)) + (field.one,)


def theta_square_commutes(c: GSpinOddParam, m: int, q=None) -> bool:
    """Both paths around the GSpin/SO square agree, and std matches the expected multiset."""
    lifted = theta_satake(c, m, q)
    field = c.field
    flat = iota_flat(project_to_so(c), m, q, field)
    upper = project_to_so(lifted)
    same_torus = len(flat) == len(upper) and all(field.eq(a, b) for a, b in zip(flat, upper))
    return same_torus and std_eigen(lifted) == theta_std_expected(c, m, q)
