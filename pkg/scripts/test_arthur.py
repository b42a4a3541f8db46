"""
Tests for formal Arthur parameters, Siegel shapes, the variant shapes,
the Rankin-Selberg tensor and remixing.

Usage:
    pytest scripts/test_arthur.py
"""
import pytest

from src.algebra.scalars import QHALF, RATIONAL
from src.arthur.params import (
    ArthurParam,
    CuspConstituent,
    SelfDualType,
    gsp4_std_constituent,
    param_satake_at_p,
    sym2_constituent,
    tensor_constituent,
    trivial_constituent,
    validate_param,
)
from src.arthur.shapes import (
    EndoscopicTempered,
    GenericCuspidal,
    NonTempered,
    VariantSource,
    evaluate_remix,
    rankin_selberg_embedding_route,
    rankin_selberg_tensor,
    remix,
    remix_embedding_route,
    spin_shape_of_siegel,
    std_shape_param,
    validate_shape,
    variant_shape,
)
from src.errors import (
    CentralCharacterMismatch,
    DegreeMismatch,
    DeterminantMismatch,
    HalfIntegralPower,
    MissingSatakeData,
    ShapeInvalid,
    SizeMismatch,
)
from src.satake.embeddings import gsp4_to_gspin5
from src.satake.multisets import EigenMultiset
from src.satake.representations import std_eigen

ORTH = SelfDualType.ORTHOGONAL
SYMP = SelfDualType.SYMPLECTIC


def em(*values, field=RATIONAL):
    return EigenMultiset.of(values, field)


def gl2(label, values, selfdual=SYMP, field=RATIONAL, prime=2, **kwargs):
    return CuspConstituent.from_values(label, {prime: values}, selfdual, field, **kwargs)


@pytest.fixture
def endoscopic():
    return EndoscopicTempered(gl2("f", [2, 3]), gl2("g", ["1/2", 5]), gl2("h", [7, "1/7"]))


def test_valid_parameter_has_no_diagnostics(endoscopic):
    param = spin_shape_of_siegel(endoscopic)
    assert param.degree == 8
    assert validate_param(param, 8, discrete=True) == []


def test_parameter_diagnostics():
    one = trivial_constituent()
    f = gl2("f", [2, 3])
    param = ArthurParam.of((one, 1), (f, 1), (one, 1))
    diagnostics = validate_param(param, 8, discrete=True)
    codes = [d.code for d in diagnostics]
    assert codes == ["degree_sum", "selfdual_parity", "not_multiplicity_free"]
    assert diagnostics[1].pointer == "/1/selfdual"
    assert diagnostics[2].pointer == "/2"
    assert diagnostics[0].to_json()["code"] == "degree_sum"


def test_non_discrete_parameters_skip_parity_checks():
    f = gl2("f", [2, 3], selfdual=SelfDualType.NONE)
    param = ArthurParam.of((f, 1), (f, 1))
    assert validate_param(param, 4, discrete=False) == []
    codes = [d.code for d in validate_param(param, 4, discrete=True)]
    assert codes == ["selfdual_parity", "selfdual_parity", "not_multiplicity_free"]


def test_arthur_sl2_shifts_in_qhalf():
    f = gl2("f", ["u", "1/u"], field=QHALF)
    param = ArthurParam.of((f, 3))
    q = QHALF.u**2
    got = param_satake_at_p(param, 2)
    u = QHALF.u
    expected = EigenMultiset([u * q, u, u / q, q / u, 1 / u, 1 / (u * q)], QHALF)
    assert len(got) == 6
    assert got == expected


def test_even_arthur_sl2_needs_half_powers():
    param = ArthurParam.of((gl2("f", [2, 3]), 2))
    with pytest.raises(HalfIntegralPower):
        param_satake_at_p(param, 2)
    assert param_satake_at_p(param, 2, q=4) == em(4, 6, 1, "3/2")


def test_missing_satake_data():
    param = ArthurParam.of((gl2("f", [2, 3]), 1))
    with pytest.raises(MissingSatakeData) as excinfo:
        param_satake_at_p(param, 3)
    assert excinfo.value.prime == 3


def test_constituent_validation():
    with pytest.raises(DegreeMismatch):
        CuspConstituent("f", 3, SYMP)
    with pytest.raises(DegreeMismatch):
        CuspConstituent.from_values("f", {2: [1, 2, 3]}, ORTH, degree=2)
    with pytest.raises(ValueError):
        gl2("f", [2, 3], root_number=2)


def test_tensor_self_dual_types():
    f, g = gl2("f", [2, 3]), gl2("g", [5, 7])
    o = gl2("o", [1, 1], selfdual=ORTH)
    assert tensor_constituent(f, g).selfdual is ORTH
    assert tensor_constituent(f, o).selfdual is SYMP
    assert tensor_constituent(f, gl2("n", [1, 2], selfdual=None)).selfdual is None
    assert tensor_constituent(f, gl2("m", [1, 2], selfdual=SelfDualType.NONE)).selfdual is SelfDualType.NONE
    assert tensor_constituent(trivial_constituent(), f) is f
    assert tensor_constituent(f, g).satake_at(2) == em(10, 14, 15, 21)


def test_sym2_is_normalized():
    s = sym2_constituent(gl2("f", [2, 8]))
    assert s.degree == 3
    assert s.satake_at(2) == em("1/4", 1, 4)
    with pytest.raises(DegreeMismatch):
        sym2_constituent(CuspConstituent.from_values("t", {2: [1, 2, 3]}, ORTH))


def test_shape_degrees(endoscopic):
    assert std_shape_param(endoscopic).degree == 7
    assert spin_shape_of_siegel(endoscopic).degree == 8
    nontempered = NonTempered(gl2("f", [2, 3], selfdual=ORTH), gl2("h", [7, "1/7"]))
    assert std_shape_param(nontempered).degrees() == [(2, 2), (3, 1)]
    assert spin_shape_of_siegel(nontempered).degrees() == [(4, 1), (2, 2)]


def test_endoscopic_spin_satake(endoscopic):
    spin = param_satake_at_p(spin_shape_of_siegel(endoscopic), 2)
    f, g, h = endoscopic.pi1.satake_at(2), endoscopic.pi2.satake_at(2), endoscopic.pi3.satake_at(2)
    assert spin == f.tensor(h) + g.tensor(h)


def test_generic_cuspidal_shapes():
    pi = CuspConstituent.from_values("Pi", {2: [4, "1/4", 9, "1/9", 36, "1/36", 1]}, ORTH)
    g2 = spin_shape_of_siegel(GenericCuspidal(pi, g2=True))
    assert g2.contains_trivial()
    assert g2.degrees() == [(1, 1), (7, 1)]
    plain = spin_shape_of_siegel(GenericCuspidal(pi))
    assert plain.degrees() == [(8, 1)]
    assert not plain.contains_trivial()


def test_invalid_shapes():
    f = gl2("f", [2, 3])
    with pytest.raises(ShapeInvalid):
        validate_shape(EndoscopicTempered(f, f, gl2("h", [1, 1])))
    with pytest.raises(ShapeInvalid):
        validate_shape(GenericCuspidal(f))
    with pytest.raises(ShapeInvalid):
        validate_shape(NonTempered(trivial_constituent(), f))


def test_pgsp2_variant():
    pi = gl2("pi", [2, 3])
    shapes = variant_shape(VariantSource.PGSP2, pi)
    assert shapes.f1.degree == 8 and shapes.f2.degree == 8
    assert shapes.f1.degrees() == [(3, 1), (1, 5)]
    assert shapes.f2.degrees() == [(2, 4)]
    f1 = param_satake_at_p(shapes.f1, 2)
    assert f1 == em("2/3", 1, "3/2", 4, 2, 1, "1/2", "1/4")


def test_pgsp4_variant():
    pi = CuspConstituent.from_values("Psi", {2: [1, 2, 3, 6]}, SYMP)
    shapes = variant_shape(VariantSource.PGSP4, pi)
    assert shapes.f1.degrees() == [(5, 1), (1, 3)]
    assert shapes.f2.degrees() == [(4, 2)]
    assert gsp4_std_constituent(pi).satake_at(2) == em("1/3", "1/2", 1, 2, 3)
    assert validate_param(shapes.f1, 8, discrete=True) == []


@pytest.mark.parametrize(
    "values",
    [
        [1, 1, -1, -1],
        [2, 3, -1, "-3/2"],
        [-1, 2, "-1/2", 1],
    ],
)
def test_gsp4_std_uses_the_paired_similitude(values):
    pi = CuspConstituent.from_values("Psi", {2: values}, SYMP)
    expected = std_eigen(gsp4_to_gspin5(pi.satake_at(2).values, RATIONAL))
    assert gsp4_std_constituent(pi).satake_at(2) == expected


def test_gsp4_std_with_negative_similitude():
    pi = CuspConstituent.from_values("Psi", {2: [1, 1, -1, -1]}, SYMP)
    assert gsp4_std_constituent(pi).satake_at(2) == em(-1, -1, 1, 1, 1)
    shapes = variant_shape(VariantSource.PGSP4, pi)
    assert param_satake_at_p(shapes.f1, 2).multiplicity(RATIONAL.convert(-1)) == 2


def test_gsp4_std_needs_paired_eigenvalues():
    pi = CuspConstituent.from_values("Psi", {2: [1, 2, 3, 5]}, SYMP)
    with pytest.raises(DeterminantMismatch):
        gsp4_std_constituent(pi)


def test_variant_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        variant_shape(VariantSource.PGSP2, CuspConstituent.from_values("Psi", {2: [1, 2, 3, 6]}, SYMP))
    with pytest.raises(DegreeMismatch):
        variant_shape("PGSp4", gl2("pi", [2, 3]))


def test_rankin_selberg():
    c2, c4 = em(2, 3), em(1, 2, 3, 6)
    product = rankin_selberg_tensor(c2, c4)
    assert len(product) == 8
    plus, minus = rankin_selberg_embedding_route(c2, c4)
    assert plus == product
    assert minus == product
    with pytest.raises(SizeMismatch):
        rankin_selberg_tensor(em(1, 2, 3), c4)


@pytest.fixture
def remix_inputs():
    return (
        gl2("heart", [2, 3], central_character="w1"),
        gl2("diamond", [1, 6], central_character="w1"),
        gl2("spade", [1, 5], central_character="w2"),
        gl2("club", [10, "1/2"], central_character="w2"),
    )


def test_remix_changes_the_parameter(remix_inputs):
    result = remix(*remix_inputs)
    before, after = evaluate_remix(result, 2)
    assert len(before) == len(after) == 8
    assert before != after
    assert after == em(2, 10, 3, 15, 10, "1/2", 60, 3)


def test_remix_matches_the_embedding(remix_inputs):
    result = remix(*remix_inputs)
    _, after = evaluate_remix(result, 2)
    assert remix_embedding_route(*remix_inputs, 2) == after


def test_remix_of_four_equal_constituents_is_unchanged():
    f = gl2("f", [2, 3])
    result = remix(f, f, f, f)
    before, after = evaluate_remix(result, 2)
    assert before == after
    assert after == em(4, 6, 6, 9, 4, 6, 6, 9)
    assert result.before.degrees() == result.after.degrees()
    assert remix_embedding_route(f, f, f, f, 2) == after


def test_remix_needs_matching_central_characters(remix_inputs):
    heart, diamond, spade, club = remix_inputs
    other = gl2("diamond", [1, 6], central_character="w3")
    with pytest.raises(CentralCharacterMismatch):
        remix(heart, other, spade, club)
