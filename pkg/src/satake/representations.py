"""
Eigenvalue multisets of the standard, spin and half-spin representations
evaluated on GSpin torus parameters.
"""
import itertools
from typing import Union

from src.satake.multisets import EigenMultiset, ProjectiveMultiset
from src.satake.torus import GSpinEvenParam, GSpinOddParam, GSpinParam

PLUS = "+"
MINUS = "-"


def std_eigen(c: GSpinParam) -> EigenMultiset:
    """{x_i, 1/x_i}, plus one eigenvalue 1 for odd groups."""
    one = c.field.one
    values = []
    for x in c.chi:
        values.extend([x, one / x])
    if isinstance(c, GSpinOddParam):
        values.append(one)
    return EigenMultiset(values, c.field)


def _subset_products(c: GSpinParam, parity=None) -> EigenMultiset:
    values = []
    for mask in itertools.product((0, 1), repeat=c.n):
        if parity is not None and sum(mask) % 2 != parity:
            continue
        v = c.mu
        for bit, x in zip(mask, c.chi):
            if bit:
                v = v * x
        values.append(v)
    return EigenMultiset(values, c.field)


def spin_eigen(c: GSpinOddParam) -> EigenMultiset:
    """{mu * prod_{i in S} x_i : S subset of {1..n}}, size 2^n."""
    return _subset_products(c)


def halfspin_eigen(c: GSpinEvenParam, sign: str = PLUS) -> EigenMultiset:
    """Even-size subsets for '+', odd-size subsets for '-'."""
    if sign not in (PLUS, MINUS):
        raise ValueError(f"half-spin sign must be '+' or '-', got {sign!r}")
    return _subset_products(c, 0 if sign == PLUS else 1)


def full_spin_eigen(c: Union[GSpinOddParam, GSpinEvenParam]) -> EigenMultiset:
    """Spin for odd groups, the sum of both half-spins for even groups."""
    return _subset_products(c)


def exterior_power(m: EigenMultiset, k: int) -> EigenMultiset:
    """Eigenvalues of the k-th exterior power: products over k-element sub-multisets of positions."""
    field = m.field
    return EigenMultiset(
        (field.product(combo) for combo in itertools.combinations(m.values, k)),
        field,
    )


def spin_square_decomposition(c: GSpinOddParam) -> EigenMultiset:
    """omega * (Lambda^0 + ... + Lambda^n) of std, which equals spin (x) spin for rank n.

    omega = mu^2 prod x_i is the central character; it is 1 on PGSp parameters.
    """
    std = std_eigen(c)
    total = EigenMultiset((), c.field)
    for k in range(c.n + 1):
        total = total + exterior_power(std, k)
    return total.scale(c.central_character())


def spinbar(c: GSpinOddParam) -> ProjectiveMultiset:
    """The spin multiset up to a common scalar."""
    return ProjectiveMultiset(spin_eigen(c).values, c.field)
