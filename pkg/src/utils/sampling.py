"""
Seeded random samples for the property checks.
"""
import random
from fractions import Fraction
from typing import List, Optional, Tuple

from src.algebra.octonion import DIM, Octonion, oct_norm
from src.algebra.scalars import RATIONAL, ScalarField
from src.config import Config
from src.satake.multisets import EigenMultiset
from src.satake.torus import GSpinOddParam
from src.triality.spin8 import SpinTriple, lift_reflection_pair, spin_mul


def make_rng(seed: Optional[int] = None) -> random.Random:
    return random.Random(Config.RANDOM_SEED if seed is None else seed)


def random_rational(rng: random.Random, bound: int = 9, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if value or not nonzero:
            return value


def random_octonion(rng: random.Random, field: ScalarField = RATIONAL, bound: int = 9) -> Octonion:
    return Octonion.from_values([random_rational(rng, bound) for _ in range(DIM)], field)


def random_anisotropic(rng: random.Random, field: ScalarField = RATIONAL, bound: int = 9) -> Octonion:
    while True:
        x = random_octonion(rng, field, bound)
        if not field.is_zero(oct_norm(x)):
            return x


def liftable_pair(rng: random.Random, field: ScalarField = RATIONAL, bound: int = 9) -> Tuple[Octonion, Octonion]:
    """(x, y) with N(x) N(y) a nonzero square, so the reflection pair lifts over the field.

    y is built with N(y) = N(x) r^2 by solving a b - v.w = N(x) r^2 for b.
    """
    while True:
        coords = [random_rational(rng, bound) for _ in range(DIM)]
        norm = coords[0] * coords[7] - sum(coords[1 + i] * coords[4 + i] for i in range(3))
        if norm:
            break
    r = random_rational(rng, bound, nonzero=True)
    a = random_rational(rng, bound, nonzero=True)
    v = [random_rational(rng, bound) for _ in range(3)]
    w = [random_rational(rng, bound) for _ in range(3)]
    b = (norm * r * r + sum(vi * wi for vi, wi in zip(v, w))) / a
    return Octonion.from_values(coords, field), Octonion.from_values([a] + v + w + [b], field)


def random_spin_element(rng: random.Random, field: ScalarField = RATIONAL, factors: int = 1) -> SpinTriple:
    """A product of ``factors`` lifted reflection pairs."""
    result = lift_reflection_pair(*liftable_pair(rng, field))
    for _ in range(factors - 1):
        result = spin_mul(result, lift_reflection_pair(*liftable_pair(rng, field)))
    return result


def random_odd_param(rng: random.Random, n: int, field: ScalarField = RATIONAL) -> GSpinOddParam:
    return GSpinOddParam.of([random_rational(rng, nonzero=True) for _ in range(n)], random_rational(rng, nonzero=True), field)


def random_pgsp6_param(rng: random.Random, field: ScalarField = RATIONAL) -> GSpinOddParam:
    """Rank 3 with mu^2 x1 x2 x3 = 1."""
    mu = random_rational(rng, nonzero=True)
    x1 = random_rational(rng, nonzero=True)
    x2 = random_rational(rng, nonzero=True)
    return GSpinOddParam.of([x1, x2, 1 / (mu * mu * x1 * x2)], mu, field)


def random_g2_param(rng: random.Random, field: ScalarField = RATIONAL) -> GSpinOddParam:
    """x3 = x1 x2 and mu = 1/(x1 x2): PGSp6 with spin eigenvalue mu x3 = 1."""
    x1 = random_rational(rng, nonzero=True)
    x2 = random_rational(rng, nonzero=True)
    return GSpinOddParam.of([x1, x2, x1 * x2], 1 / (x1 * x2), field)


def random_gl2(rng: random.Random, field: ScalarField = RATIONAL, det=None) -> EigenMultiset:
    """{g1, g2}, with g1 g2 = det when given."""
    g1 = field.convert(random_rational(rng, nonzero=True))
    g2 = field.convert(det) / g1 if det is not None else field.convert(random_rational(rng, nonzero=True))
    return EigenMultiset((g1, g2), field)


def random_gsp4(rng: random.Random, field: ScalarField = RATIONAL) -> List:
    """(b1, b2, b3, b4) with b1 b4 = b2 b3."""
    b1, b2, b3 = (random_rational(rng, nonzero=True) for _ in range(3))
    return field.values([b1, b2, b3, b2 * b3 / b1])
