"""
Tests for scalars, split octonions and 8x8 matrices.

Usage:
    pytest scripts/test_algebra.py
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra.matrices import Mat8, gram_matrix, is_special_orthogonal, reflection, similitude_factor
from src.algebra.octonion import Octonion, oct_bilinear, oct_conj, oct_mul, oct_norm, para_mul
from src.algebra.scalars import QHALF, RATIONAL
from src.errors import HalfIntegralPower, IsotropicVector, NotASimilitude, NotASquare, ParseError, ScalarModeMismatch

small = st.fractions(min_value=-6, max_value=6, max_denominator=6)
octonions = st.lists(small, min_size=8, max_size=8).map(lambda v: Octonion.from_values(v, RATIONAL))


@settings(max_examples=60, deadline=None)
@given(octonions, octonions)
def test_norm_is_multiplicative(x, y):
    assert oct_norm(oct_mul(x, y)) == oct_norm(x) * oct_norm(y)


@settings(max_examples=60, deadline=None)
@given(octonions, octonions)
def test_para_product_composes_norm(x, y):
    assert oct_norm(para_mul(x, y)) == oct_norm(x) * oct_norm(y)


@settings(max_examples=60, deadline=None)
@given(octonions, octonions, octonions)
def test_para_product_is_associative_for_the_form(x, y, z):
    assert oct_bilinear(para_mul(x, y), z) == oct_bilinear(x, para_mul(y, z))


@settings(max_examples=60, deadline=None)
@given(octonions, octonions)
def test_para_product_flexible_law(x, y):
    assert para_mul(para_mul(x, y), x) == y.scale(oct_norm(x))


@given(octonions)
def test_conjugation(x):
    assert oct_conj(oct_conj(x)) == x
    assert oct_mul(x, oct_conj(x)) == Octonion.one().scale(oct_norm(x))


@given(octonions, octonions)
def test_polarization(x, y):
    assert oct_bilinear(x, y) == oct_norm(x + y) - oct_norm(x) - oct_norm(y)


def test_basis_and_unit():
    e = Octonion.basis(0)
    e_prime = Octonion.basis(7)
    assert e + e_prime == Octonion.one()
    assert oct_mul(e, e) == e
    assert oct_mul(e, e_prime).is_zero()
    assert oct_norm(e) == 0


def test_zorn_product_of_basis_vectors():
    u1 = Octonion.basis(1)
    u1_star = Octonion.basis(4)
    # u1 * u1^* = e, u1^* * u1 = e'
    assert oct_mul(u1, u1_star) == Octonion.basis(0)
    assert oct_mul(u1_star, u1) == Octonion.basis(7)


def test_gram_matrix_is_symmetric_and_nondegenerate():
    g = gram_matrix(RATIONAL)
    assert g.equals(g.transpose())
    assert g.det() != 0


def test_reflections(rng):
    x = Octonion.from_values([1, 2, 0, 0, 1, 0, 0, 3])
    y = Octonion.from_values([2, 0, 1, 0, 0, 1, 0, 1])
    sx = reflection(x)
    assert sx.apply(x) == -x
    assert (sx @ sx).is_identity()
    assert sx.det() == -1
    assert similitude_factor(sx) == 1
    assert is_special_orthogonal(sx @ reflection(y))


def test_reflection_of_isotropic_vector():
    with pytest.raises(IsotropicVector):
        reflection(Octonion.basis(0))


def test_similitude_of_scalar_matrix():
    m = Mat8.scalar(RATIONAL.rational(3))
    assert similitude_factor(Mat8(m.rep, m.field)) == 9


def test_identity_multiplies_built_matrices():
    eye = Mat8.identity()
    g = gram_matrix(RATIONAL)
    assert (eye @ g).equals(g)
    assert (g @ eye).equals(g)
    assert is_special_orthogonal(eye)
    sx = reflection(Octonion.from_values([1, 2, 0, 0, 1, 0, 0, 3]))
    assert (Mat8.scalar(RATIONAL.rational(3)) @ sx).equals(sx.scale(RATIONAL.rational(3)))
    assert similitude_factor(Mat8.scalar(RATIONAL.rational(-1)) @ sx) == 1


def test_cached_similitude_is_checked():
    eye = Mat8.identity()
    rows = eye.rows
    assert similitude_factor(Mat8.from_rows(rows, RATIONAL, similitude=RATIONAL.one)) == 1
    with pytest.raises(NotASimilitude):
        similitude_factor(Mat8.from_rows(rows, RATIONAL, similitude=RATIONAL.rational(5)))
    with pytest.raises(NotASimilitude):
        similitude_factor(Mat8(eye.rep, RATIONAL, RATIONAL.rational(4)))


def test_rational_parsing():
    assert RATIONAL.convert("3/4") == RATIONAL.rational(3, 4)
    assert RATIONAL.convert(Fraction(-2, 6)) == RATIONAL.rational(-1, 3)
    with pytest.raises(ParseError):
        RATIONAL.convert(0.5)
    with pytest.raises(ParseError):
        RATIONAL.convert("u")


def test_rational_square_roots():
    assert RATIONAL.sqrt(RATIONAL.rational(9, 4)) == RATIONAL.rational(3, 2)
    with pytest.raises(NotASquare):
        RATIONAL.sqrt(RATIONAL.rational(2))
    with pytest.raises(HalfIntegralPower):
        RATIONAL.half_power(RATIONAL.rational(5), 1)
    assert RATIONAL.half_power(RATIONAL.rational(5), -2) == RATIONAL.rational(1, 5)


def test_qhalf_scalars():
    u = QHALF.u
    q = QHALF.default_q(7)
    assert QHALF.eq(q, u * u)
    assert QHALF.eq(QHALF.half_power(q, 3), u**3)
    assert QHALF.eq(QHALF.sqrt(QHALF.convert("4*u**2/9")), QHALF.convert("2*u/3"))
    assert QHALF.to_complex(u, q_value=4) == pytest.approx(2)
    assert QHALF.to_json(QHALF.convert("q")) == "u**2"


def test_mixing_modes_is_rejected():
    x = Octonion.one(RATIONAL)
    y = Octonion.one(QHALF)
    with pytest.raises(ScalarModeMismatch):
        oct_mul(x, y)


def test_complex_mode_tolerance(cc):
    a = cc.convert([1.0, 0.0])
    b = cc.convert([1.0 + 1e-12, 0.0])
    assert cc.eq(a, b)
    assert cc.to_json(cc.convert("1+2i")) == [1.0, 2.0]
