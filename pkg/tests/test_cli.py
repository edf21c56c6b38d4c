import json

import pytest
from hypothesis import given, settings, HealthCheck

from vidinli.char2 import make_char2_presentation, twist
from vidinli.cli import run_command
from vidinli.field import GF, QQ
from vidinli.serialize import (algebra_file_from_json, bilinear_file, char2_file, loads_algebra_file,
                               read_algebra_file, reverify_report, structure_file)

from strategies import odd_field_and_form
from test_algebra import dual_numbers
from test_char2 import presentations

GF2, GF5 = GF(2), GF(5)


def write(tmp_path, name, af):
    p = tmp_path / name
    p.write_text(af.dumps() if hasattr(af, "dumps") else af)
    return str(p)


def run(argv, capsys):
    code = run_command(argv)
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip().startswith("{") else out), err


# -- file format ------------------------------------------------------------------------------

@given(odd_field_and_form())
def test_bilinear_round_trip(FB):
    F, B = FB
    af = bilinear_file(F, B)
    again = loads_algebra_file(af.dumps())
    assert again == af and again.algebra().constants == af.algebra().constants


@given(presentations())
def test_char2_round_trip(P):
    af = char2_file(P)
    assert loads_algebra_file(af.dumps()) == af
    s = structure_file(P.algebra)
    assert loads_algebra_file(s.dumps()).algebra().constants == P.algebra.constants


def test_rational_round_trip():
    af = bilinear_file(QQ, [["1/2", -3], [0, "-6/4"]])
    assert loads_algebra_file(af.dumps()) == af


@pytest.mark.parametrize("text,match", [
    ("{", "line 1"),
    ('{"field": {"kind": "prime", "p": 5}}', "presentation"),
    ('{"field": {"kind": "prime", "p": 2}, "presentation": {"kind": "bilinear", "matrix": [[1]]}}',
     "characteristic"),
    ('{"field": {"kind": "prime", "p": 5}, "presentation": {"kind": "char2", "phi": [[1]], "star": [[[0]]]}}',
     "GF\\(2\\)"),
    ('{"field": {"kind": "prime", "p": 5}, "presentation": {"kind": "bilinear", "matrix": [[1]]}, "x": 1}',
     "x"),
])
def test_malformed_files(text, match):
    from vidinli.errors import InputError
    with pytest.raises(InputError, match=match):
        loads_algebra_file(text)


def test_non_square_matrix(capsys, tmp_path):
    path = tmp_path / "m.json"
    path.write_text('{"field": {"kind": "prime", "p": 5}, "presentation": {"kind": "bilinear", "matrix": [[1, 2]]}}')
    code, _, err = run(["verify", str(path)], capsys)
    assert code == 1 and "square" in err


def test_field_flag_conflict(tmp_path):
    from vidinli.errors import InputError
    path = write(tmp_path, "a.json", bilinear_file(QQ, [[-1]]))
    with pytest.raises(InputError, match="--field"):
        read_algebra_file(path, GF5)
    d = json.loads(open(path).read())
    del d["field"]
    assert algebra_file_from_json(d, GF5).field == GF5


# -- commands ------------------------------------------------------------------------------------

def test_example_command(capsys, tmp_path):
    code, out, _ = run(["example", "coskun-eden", "1"], capsys)
    assert code == 0
    af = algebra_file_from_json(out)
    assert af.algebra().dim == 3 and af.field == QQ
    code, _, err = run(["example", "coskun-eden", "0"], capsys)
    assert code == 1 and "at least 1" in err


def test_analyze_field_times_field(capsys, tmp_path):
    path = write(tmp_path, "a.json", bilinear_file(QQ, [[-1]]))
    code, rep, _ = run(["analyze", path], capsys)
    assert code == 0 and rep["ok"]
    assert rep["result"]["quotient_class"] == "field_times_field"
    assert rep["result"]["rad_basis"] == []
    assert set(rep["input_sha256"]) == {path}
    assert reverify_report(rep, read_algebra_file(path)[0]) and all(reverify_report(rep, read_algebra_file(path)[0]).values())


@pytest.mark.parametrize("B", [[[0, 1], [-1, 0]], [[1, 2], [0, 1]], [[0, 0], [0, 0]], [[2, 1], [1, 3]]])
@pytest.mark.parametrize("command", ["analyze", "centers"])
def test_reports_reverify(B, command, capsys, tmp_path):
    path = write(tmp_path, "a.json", bilinear_file(GF5, B))
    code, rep, _ = run([command, path], capsys)
    assert code == 0 and rep["ok"]
    checks = reverify_report(rep, read_algebra_file(path)[0])
    assert all(checks.values())


def test_verify_exit_codes(capsys, tmp_path):
    good = write(tmp_path, "good.json", bilinear_file(GF5, [[1, 2], [0, 1]]))
    code, rep, _ = run(["verify", good], capsys)
    assert code == 0 and rep["result"]["vidinli"] and rep["verification"]["round_trip_B"]
    bad = write(tmp_path, "bad.json", structure_file(dual_numbers(GF5)).dumps())
    assert run(["verify", bad], capsys)[0] == 0  # dim 2 conic algebras are Vidinli
    from vidinli.algebra import make_algebra
    # e1^2 = e2 is not quadratic over the unity
    A = make_algebra(GF5, [[[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[0, 1, 0], [0, 0, 1], [0, 0, 0]],
                           [[0, 0, 1], [0, 0, 0], [0, 0, 0]]], 0)
    code, rep, _ = run(["verify", write(tmp_path, "n.json", structure_file(A))], capsys)
    assert code == 1 and rep["ok"] is False and rep["result"]["vidinli"] is False


@settings(max_examples=15, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(presentations())
def test_verify_agrees_with_recognition_char2(capsys, tmp_path, P):
    from vidinli.char2 import is_vidinli_char2
    path = write(tmp_path, "p.json", structure_file(P.algebra))
    code, rep, _ = run(["verify", path], capsys)
    assert (code == 0) == (is_vidinli_char2(P.algebra) is not None)


def test_iso_command(capsys, tmp_path):
    P = make_char2_presentation(GF2, [[[0, 0], [1, 1]], [[1, 1], [0, 0]]], [[1, 1], [0, 0]])
    a = write(tmp_path, "p.json", char2_file(P))
    b = write(tmp_path, "q.json", char2_file(twist(P, [1, 0])))
    code, rep, _ = run(["iso", a, b, "--oracle"], capsys)
    assert code == 0 and rep["result"]["isomorphic"] and rep["verification"]["oracle_agrees"]
    Z = make_char2_presentation(GF2, [[[0, 0], [0, 0]], [[0, 0], [0, 0]]], [[0, 0], [0, 0]])
    code, rep, _ = run(["iso", a, write(tmp_path, "z.json", char2_file(Z))], capsys)
    assert code == 0 and not rep["result"]["isomorphic"] and rep["result"]["witness"] is None


def test_iso_bound_flag_named(capsys, tmp_path):
    m = 3
    P = make_char2_presentation(GF2, [[[0] * m] * m] * m, [[0] * m] * m)
    a = write(tmp_path, "p.json", char2_file(P))
    code, _, err = run(["iso", a, a, "--max-iso-dim", "2"], capsys)
    assert code == 1 and "--max-iso-dim" in err


def test_bilinear_over_gf2_rejected(capsys, tmp_path):
    path = tmp_path / "b.json"
    path.write_text('{"field": {"kind": "prime", "p": 2}, "presentation": {"kind": "bilinear", "matrix": [[1]]}}')
    code, _, err = run(["analyze", str(path)], capsys)
    assert code == 1 and "error" in err


def test_missing_file_and_bad_args(capsys, tmp_path):
    assert run(["analyze", str(tmp_path / "nope.json")], capsys)[0] == 1
    assert run(["frobnicate"], capsys)[0] == 1


def test_classify2_and_char2_analyze(capsys, tmp_path):
    path = write(tmp_path, "d.json", structure_file(dual_numbers()))
    code, rep, _ = run(["classify2", path], capsys)
    assert code == 0 and rep["result"]["tag"] == "dual_numbers"
    P = make_char2_presentation(GF2, [[[0, 0], [0, 0]], [[0, 0], [0, 0]]], [[0, 1], [0, 0]])
    code, rep, _ = run(["analyze", write(tmp_path, "p.json", char2_file(P))], capsys)
    assert code == 0 and rep["verification"]["N_equals_Z"]
    assert rep["result"]["center"]["branch"] == "unity_line"


def test_output_is_deterministic(capsys, tmp_path):
    path = write(tmp_path, "a.json", bilinear_file(GF5, [[0, 1], [-1, 0]]))
    outs = []
    for _ in range(2):
        run_command(["analyze", path, "--oracle"])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_out_and_text_format(capsys, tmp_path):
    path = write(tmp_path, "a.json", bilinear_file(GF5, [[1]]))
    out = tmp_path / "r.json"
    assert run_command(["centers", path, "--out", str(out)]) == 0
    assert json.loads(out.read_text())["ok"] is True
    assert run_command(["centers", path, "--format", "text"]) == 0
    text = capsys.readouterr().out
    assert "ok" in text and not text.lstrip().startswith("{")


@pytest.mark.parametrize("B", [[[1, 0], [0, 2]], [[1, 1], [0, 1]], [[0, 1], [1, 0]], [[1, 0, 0], [0, 1, 0], [0, 0, 1]]])
def test_decompose_reverifies(B, capsys, tmp_path):
    path = write(tmp_path, "a.json", bilinear_file(GF5, B))
    code, rep, _ = run(["decompose", path], capsys)
    assert code == 0 and rep["ok"]
    assert all(reverify_report(rep, read_algebra_file(path)[0]).values())


def test_decompose_refuses_degenerate(capsys, tmp_path):
    path = write(tmp_path, "a.json", bilinear_file(GF5, [[0, 1], [-1, 0]]))
    code, _, err = run(["decompose", path], capsys)
    assert code == 1 and "degenerate" in err


def test_decompose_with_factors(capsys, tmp_path):
    # sigma for B = [[1, 1], [0, 1]]: user-supplied factors must agree with the computed ones
    path = write(tmp_path, "a.json", bilinear_file(GF5, [[1, 1], [0, 1]]))
    code, rep, _ = run(["decompose", path], capsys)
    assert code == 0
    code2, rep2, _ = run(["decompose", path, "--factors", "1,0,0;1"], capsys)
    assert code2 != 0
