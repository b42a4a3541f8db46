"""
Tests for the tri-spin group and the maps j_e, rho_e.

Usage:
    pytest scripts/test_trispin.py
"""
import pytest

from src.algebra.matrices import Mat8, similitude_factor
from src.algebra.scalars import RATIONAL
from src.errors import ZeroScalar
from src.triality.spin8 import CenterElement, SpinTriple, center_by_label, nontrivial_center
from src.triality.trispin import (
    TriSpinElement,
    rho_tilde_2,
    rho_tilde_2_factored,
    theta_label,
    trispin_identities,
    trispin_j_e,
    trispin_rho_e,
    trispin_theta,
)
from src.utils.sampling import random_rational, random_spin_element

SAMPLES = 6


def _random_element(rng) -> TriSpinElement:
    t = {lab: RATIONAL.convert(random_rational(rng, nonzero=True)) for lab in (1, 2, 3)}
    return TriSpinElement(t, random_spin_element(rng))


def test_identities_on_random_elements(rng):
    for _ in range(SAMPLES):
        z = _random_element(rng)
        t = RATIONAL.convert(random_rational(rng, nonzero=True))
        results = trispin_identities(z, t)
        assert all(results.values()), [k for k, v in results.items() if not v]


def test_theta_labels_follow_the_cycle():
    assert [theta_label(lab) for lab in (1, 2, 3)] == [3, 1, 2]


def test_rho_e_of_j_e_lands_in_so8(rng):
    s = random_spin_element(rng)
    t = RATIONAL.rational(5, 3)
    for e in nontrivial_center():
        m = trispin_rho_e(e, trispin_j_e(e, t, s))
        assert m.equals(s.components[e.label - 1])
        assert similitude_factor(m) == 1


def test_rho_theta_e_of_j_e_is_multiplication_by_t():
    t = RATIONAL.rational(-7, 2)
    e = center_by_label(1)
    m = trispin_rho_e(e.theta(), trispin_j_e(e, t, SpinTriple.identity()))
    assert m.equals(Mat8.scalar(t))
    assert similitude_factor(m) == t * t


def test_rho_tilde_2_factors_through_theta(rng):
    s = random_spin_element(rng)
    t = RATIONAL.rational(4, 9)
    assert rho_tilde_2(t, s).equals(rho_tilde_2_factored(t, s))


def test_central_identification(rng):
    z = _random_element(rng)
    for f in nontrivial_center():
        twisted = z.twist(f)
        assert twisted.equals(z)
    assert len(z.representatives()) == 4


def test_distinct_scalars_are_distinct(rng):
    z = _random_element(rng)
    t = dict(z.t)
    t[2] = t[2] * 2
    assert not TriSpinElement(t, z.s).equals(z)


def test_trispin_theta_order_three(rng):
    z = _random_element(rng)
    assert trispin_theta(trispin_theta(trispin_theta(z))).equals(z)
    assert not trispin_theta(z).equals(z)


def test_j_e_rejects_bad_arguments():
    s = SpinTriple.identity()
    with pytest.raises(ValueError):
        trispin_j_e(CenterElement((1, 1, 1)), RATIONAL.one, s)
    with pytest.raises(ZeroScalar):
        trispin_j_e(center_by_label(2), RATIONAL.zero, s)


def test_zero_components_are_rejected():
    with pytest.raises(ZeroScalar):
        TriSpinElement({1: RATIONAL.one, 2: RATIONAL.zero, 3: RATIONAL.one}, SpinTriple.identity())
