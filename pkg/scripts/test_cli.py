"""
End-to-end tests for the command line: output documents, exit codes and
error locations.

Usage:
    pytest scripts/test_cli.py
"""
import json
import math

import pytest

from src.algebra.scalars import RATIONAL
from src.cli import main, parse_input, resolve_field
from src.cli.schemas import GSpinParamIn
from src.errors import ParseError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def run_error(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert out == ""
    return code, json.loads(err)["error"]


def test_weights_output_is_byte_exact(capsys):
    code, out, _ = run(capsys, "satake", "weights", "12", "12", "12")
    assert code == 0
    assert out == '{"a":11,"b":10,"c":9,"schema":"v1","w":[15,6,5,4]}'


def test_verify_identity_triple(capsys, data_dir):
    result = run_json(capsys, "verify-triple", "--in", str(data_dir / "triple_identity.json"))
    assert result == {"schema": "v1", "valid": True}


def test_lift_sample_pair(capsys, data_dir):
    result = run_json(capsys, "lift", "--in", str(data_dir / "pair_lift.json"))
    assert result["valid"] is True


def test_trispin_check(capsys, data_dir):
    result = run_json(capsys, "trispin-check", "--in", str(data_dir / "trispin_pair.json"))
    assert result["holds"] is True
    assert result["identities"]["theta_order_3"] is True


def test_center_listing(capsys):
    result = run_json(capsys, "center")
    assert len(result["members"]) == 4
    assert sorted(result["kernels"]) == ["1", "2", "3"]


def test_theta_lift_of_all_ones(capsys):
    result = run_json(capsys, "satake", "theta-lift", "--n", "3", "--m", "4")
    assert result["param"]["group"] == "GSpinEven"
    assert result["param"]["chi"] == ["1", "1", "1", "1"]
    assert result["param"]["mu"] == "1"
    assert result["square_commutes"] is True


def test_g2_parameter(capsys, data_dir):
    result = run_json(capsys, "satake", "g2", "--in", str(data_dir / "param_g2_type.json"))
    assert result["g2"] is True
    assert sorted(result["decomposition"]) == sorted(result["spin"])


def test_g2_identity_command(capsys, data_dir):
    result = run_json(capsys, "lfun", "g2-identity", "--in", str(data_dir / "param_g2_type.json"))
    assert result["holds"] is True


def test_endoscopic_spin_shape(capsys, data_dir):
    result = run_json(capsys, "arthur", "spin-shape", "--in", str(data_dir / "shape_endoscopic.json"))
    assert result["degrees"] == [[4, 1], [4, 1]]
    assert len(result["std"]) == 2


def test_nontempered_metadata(capsys, data_dir):
    result = run_json(capsys, "lfun", "metadata", "--in", str(data_dir / "shape_nontempered.json"), "12", "12", "12")
    assert result["degree"] == 8
    assert result["epsilon"] == 1
    assert result["pole_at_one"] is False
    assert result["gamma"] == {"shifts": [15, 6, 5, 4]}


def test_euler_inline(capsys):
    doc = json.dumps({"constant": ["1"], "bound_exponent": 0})
    result = run_json(capsys, "lfun", "euler", "--inline", doc, "--s", "2", "--cutoff", "100")
    real, imag = result["value"]
    assert real == pytest.approx(math.pi**2 / 6, rel=5e-3)
    assert imag == pytest.approx(0)
    assert result["primes_used"] == 25
    assert result["warnings"] == []


def test_euler_warns_below_the_abscissa(capsys, data_dir):
    result = run_json(capsys, "lfun", "euler", "--in", str(data_dir / "euler_zeta.json"), "--s", "1", "--cutoff", "30")
    assert len(result["warnings"]) == 1


def test_arthur_validate_bare_list(capsys):
    doc = json.dumps([{"label": "1", "degree": 1, "everywhere": ["1"]}])
    result = run_json(capsys, "arthur", "validate", "--inline", doc)
    assert result["valid"] is False
    assert [d["code"] for d in result["diagnostics"]] == ["degree_sum"]


def test_output_is_deterministic(capsys, data_dir):
    argv = ("satake", "spin", "--in", str(data_dir / "param_g2_type.json"))
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_zero_mu_is_a_parse_error(capsys):
    code, error = run_error(capsys, "satake", "spin", "--inline", '{"n": 1, "chi": ["2"], "mu": "0"}')
    assert code == 2
    assert error["code"] == "parse_error"
    assert error["location"] == "/mu"


def test_chi_length_is_checked(capsys):
    code, error = run_error(capsys, "satake", "std", "--inline", '{"n": 2, "chi": ["2"], "mu": "1"}')
    assert code == 2
    assert error["location"] == "/chi"


def test_invalid_json(capsys):
    code, error = run_error(capsys, "satake", "std", "--inline", "{not json")
    assert code == 2
    assert error["code"] == "parse_error"


def test_missing_input(capsys):
    code, _ = run_error(capsys, "satake", "std")
    assert code == 2


def test_spinor_norm_obstruction_exit_code(capsys):
    doc = json.dumps({"x": ["1", "0", "0", "0", "0", "0", "0", "1"], "y": ["2", "0", "0", "0", "0", "0", "0", "1"]})
    code, error = run_error(capsys, "lift", "--inline", doc)
    assert code == 1
    assert error["code"] == "spinor_norm_obstruction"
    assert error["location"] == ""


def test_weight_violation_exit_code(capsys):
    code, error = run_error(capsys, "satake", "weights", "12", "12", "11")
    assert code == 1
    assert error["code"] == "weight_constraint_violated"


def test_argparse_errors_exit():
    with pytest.raises(SystemExit) as excinfo:
        main(["satake", "weights", "12"])
    assert excinfo.value.code == 2


def test_parameter_documents_round_trip(data_dir):
    doc = json.loads((data_dir / "param_g2_type.json").read_text())
    field = resolve_field(doc)
    assert field == RATIONAL
    param = parse_input(GSpinParamIn, doc, field).build(field)
    assert param.to_json() == doc


def test_declared_mode_must_be_known():
    with pytest.raises(ParseError) as excinfo:
        resolve_field({"mode": "p-adic"})
    assert excinfo.value.location == "/mode"
