"""
Tests for Spin(8) triples, triality, the rho_j and reflection-pair lifting.

Usage:
    pytest scripts/test_triality.py
"""
from fractions import Fraction

import pytest

from src.algebra.matrices import Mat8, is_special_orthogonal, reflection
from src.algebra.octonion import Octonion
from src.algebra.scalars import RATIONAL
from src.errors import InvalidTriple, IsotropicVector, SpinorNormObstruction
from src.triality.spin8 import (
    CenterElement,
    SpinTriple,
    center_enumerate,
    is_spin_triple,
    is_triality_fixed,
    kernel_of_rho,
    lift_reflection_pair,
    rho,
    spin_inv,
    spin_mul,
    spin_relation_failures,
    triality_theta,
)
from src.utils.sampling import liftable_pair, random_spin_element

LIFTS = 12


@pytest.fixture
def lifts(rng):
    pairs = [liftable_pair(rng) for _ in range(LIFTS)]
    return [(x, y, lift_reflection_pair(x, y)) for x, y in pairs]


def test_identity_is_a_spin_triple():
    eye = Mat8.identity()
    assert is_spin_triple(eye, eye, eye)
    assert is_triality_fixed(SpinTriple.identity())


def test_lifts_satisfy_all_relations(lifts):
    for x, y, a in lifts:
        assert a.is_valid
        assert rho(1, a).equals(reflection(x) @ reflection(y))


def test_other_lift_is_the_central_twist(lifts):
    twist = CenterElement((1, -1, -1)).to_triple(RATIONAL)
    for _, _, a in lifts:
        b = spin_mul(twist, a)
        assert b.is_valid
        assert rho(1, b).equals(rho(1, a))
        assert not b.equals(a)


def test_theta_has_order_three(lifts):
    for _, _, a in lifts:
        assert triality_theta(triality_theta(triality_theta(a))).equals(a)


def test_theta_permutes_projections(lifts):
    for _, _, a in lifts:
        ta = triality_theta(a)
        assert rho(1, ta).equals(rho(2, a))
        assert rho(2, ta).equals(rho(3, a))
        assert rho(3, ta).equals(rho(1, a))


def test_theta_is_a_homomorphism(lifts):
    for (_, _, a), (_, _, b) in zip(lifts, lifts[1:]):
        assert triality_theta(spin_mul(a, b)).equals(spin_mul(triality_theta(a), triality_theta(b)))


def test_products_and_inverses_stay_in_spin(rng):
    a = random_spin_element(rng, factors=2)
    assert is_spin_triple(a.g1, a.g2, a.g3)
    assert spin_mul(a, spin_inv(a)).equals(SpinTriple.identity())


def test_projections_of_lifts_are_distinct(lifts):
    _, _, a = lifts[0]
    assert not rho(2, a).equals(rho(1, a))
    assert not rho(3, a).equals(rho(1, a))


def test_center_scan():
    members = center_enumerate(RATIONAL)
    assert len(members) == 4
    assert all(c.signs[0] == c.signs[1] * c.signs[2] for c in members)
    kernels = [kernel_of_rho(j, RATIONAL) for j in (1, 2, 3)]
    assert all(len(k) == 2 for k in kernels)
    assert len({frozenset(k) for k in kernels}) == 3
    assert kernels[0] == frozenset({CenterElement((1, 1, 1)), CenterElement((1, -1, -1))})


def test_center_members_carry_labels_one_to_three():
    members = center_enumerate(RATIONAL)
    assert len(members) == 4
    assert sorted(c.label for c in members if not c.is_identity) == [1, 2, 3]
    assert CenterElement((1, 1, 1)) in members
    assert all(c.to_triple(RATIONAL).is_valid for c in members)


def _sl3_automorphism(g):
    """(a, v; w, b) -> (a, g v; g^{-T} w, b) for a 3x3 rational g of determinant 1."""
    rows = [[0] * 8 for _ in range(8)]
    rows[0][0] = rows[7][7] = 1
    for i in range(3):
        for j in range(3):
            rows[1 + i][1 + j] = g[i][j]
    inv_t = _inverse_transpose_3x3(g)
    for i in range(3):
        for j in range(3):
            rows[4 + i][4 + j] = inv_t[i][j]
    return Mat8.from_rows(rows, RATIONAL)


def _inverse_transpose_3x3(g):
    # cofactor matrix, valid because det g = 1
    return [
        [
            g[(i + 1) % 3][(j + 1) % 3] * g[(i + 2) % 3][(j + 2) % 3]
            - g[(i + 1) % 3][(j + 2) % 3] * g[(i + 2) % 3][(j + 1) % 3]
            for j in range(3)
        ]
        for i in range(3)
    ]


@pytest.mark.parametrize(
    "g",
    [
        [[Fraction(2), 0, 0], [0, Fraction(1, 2), 0], [0, 0, Fraction(1)]],
        [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
        [[1, 3, 0], [0, 1, 0], [0, 0, 1]],
    ],
    ids=["torus", "cyclic", "unipotent"],
)
def test_g2_elements_are_triality_fixed(g):
    d = _sl3_automorphism(g)
    assert not d.is_identity()
    assert is_special_orthogonal(d)
    a = SpinTriple(d, d, d)
    assert a.is_valid
    assert is_triality_fixed(a)
    assert triality_theta(a).equals(a)


def test_central_twist_and_lifts_are_not_triality_fixed(lifts):
    twist = CenterElement((1, -1, -1)).to_triple(RATIONAL)
    assert twist.is_valid
    assert not is_triality_fixed(twist)
    _, _, a = lifts[0]
    assert not is_triality_fixed(a)


def test_center_labels_and_theta():
    e1 = CenterElement((1, -1, -1))
    assert e1.label == 1
    assert rho(1, e1.to_triple(RATIONAL)).is_identity()
    # theta rotates the kernel of rho_1 onto the kernel of rho_3
    assert e1.theta().label == 3
    assert e1.theta().theta().label == 2
    assert e1.theta().theta().theta() == e1


def test_invalid_triple_is_reported():
    eye = Mat8.identity()
    bad = SpinTriple(eye, eye, -eye)
    assert not bad.is_valid
    failures = spin_relation_failures(eye, eye, -eye)
    assert failures and failures[0].kind == "relation"
    with pytest.raises(InvalidTriple):
        triality_theta(bad)


def test_non_orthogonal_component_is_reported():
    eye = Mat8.identity()
    double = eye.scale(RATIONAL.rational(2))
    failures = spin_relation_failures(double, eye, eye)
    assert failures[0].kind == "orthogonality"
    assert failures[0].component == 1


def test_spinor_norm_obstruction():
    x = Octonion.from_values([1, 0, 0, 0, 0, 0, 0, 1])
    y = Octonion.from_values([2, 0, 0, 0, 0, 0, 0, 1])
    with pytest.raises(SpinorNormObstruction):
        lift_reflection_pair(x, y)


def test_isotropic_pair_is_rejected():
    with pytest.raises(IsotropicVector):
        lift_reflection_pair(Octonion.basis(0), Octonion.one())


def test_sample_pair_lifts():
    x = Octonion.from_values([1, 0, 0, 0, 0, 0, 0, 1])
    y = Octonion.from_values([2, 1, 0, 0, 1, 0, 0, 1])
    a = lift_reflection_pair(x, y)
    assert a.is_valid
    assert rho(1, a).equals(reflection(x) @ reflection(y))
