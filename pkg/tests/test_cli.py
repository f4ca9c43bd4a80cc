"""Command-line surface: outputs, formats, determinism, exit codes."""

from __future__ import annotations

import json

from unival import ExactMatrix, kinematic_matrix, poly_parse
from unival.cli import run


def _capture(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_basis_plain(capsys):
    code, out, _ = _capture(capsys, ["basis", "--n", "3", "--degree", "4"])
    assert code == 0
    assert out == "t^4, s*t^2\n"


def test_basis_above_top_degree_is_empty(capsys):
    code, out, _ = _capture(capsys, ["basis", "--n", "2", "--degree", "5"])
    assert code == 0
    assert out == "\n"


def test_basis_below_first_relation(capsys):
    code, out, _ = _capture(capsys, ["basis", "--n", "4", "--degree", "2"])
    assert code == 0
    assert out == "t^2, s\n"


def test_reduce_examples(capsys):
    code, out, _ = _capture(capsys, ["reduce", "--n", "2", "s^2"])
    assert (code, out) == (0, "1/6*t^4\n")
    code, out, _ = _capture(capsys, ["reduce", "--n", "1", "t^3"])
    assert (code, out) == (0, "0\n")
    # -3*s*t reduces to -t^3, cancelling the t^3 term
    code, out, _ = _capture(capsys, ["reduce", "--n", "2", "s - 1/2*t^2 + t^3 - 3*s*t"])
    assert code == 0
    assert poly_parse(out.strip()) == poly_parse("s - 1/2*t^2")


def test_mul(capsys):
    code, out, _ = _capture(capsys, ["mul", "--n", "2", "s", "s"])
    assert (code, out) == (0, "1/6*t^4\n")


def test_matrix_json_round_trip(capsys):
    code, out, _ = _capture(capsys, ["matrix", "--n", "2", "--k", "1", "--which", "Q", "--format", "json"])
    assert code == 0
    assert ExactMatrix.from_json(json.loads(out)) == kinematic_matrix(2, 1)
    assert json.loads(out) == [["3", "-6"], ["-6", "18"]]


def test_matrix_latex(capsys):
    code, out, _ = _capture(capsys, ["matrix", "--n", "3", "--k", "1", "--which", "P", "--format", "latex"])
    assert code == 0
    assert out == "\\begin{bmatrix}\n1 & \\frac{3}{10} \\\\\n\\frac{3}{10} & \\frac{1}{10}\n\\end{bmatrix}\n"


def test_matrix_annihilator_change(capsys):
    code, out, _ = _capture(capsys, ["matrix", "--n", "3", "--k", "1", "--which", "A"])
    assert code == 0
    assert out.splitlines() == ["1    0", "3  -10"]


def test_matrix_companion_json(capsys):
    code, out, _ = _capture(capsys, ["matrix", "--n", "3", "--k", "1", "--which", "companion", "--format", "json"])
    assert code == 0
    assert json.loads(out) == {"n": 3, "k": 1, "a": ["1/2", "-2"]}


def test_kinematic_unit_blocks(capsys):
    code, out, _ = _capture(capsys, ["kinematic", "--n", "1", "--phi", "1"])
    assert code == 0
    assert out.splitlines() == ["(0,2): 1(x)t^2", "(1,1): t(x)t", "(2,0): t^2(x)1"]


def test_kinematic_middle_block_is_kinematic_matrix(capsys):
    code, out, _ = _capture(capsys, ["kinematic", "--n", "2", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    middle = next(b for b in payload["blocks"] if b["degrees"] == [2, 2])
    assert ExactMatrix.from_json(middle["matrix"]) == kinematic_matrix(2, 1)
    assert middle["row_basis"] == ["t^2", "s"]


def test_kinematic_orthogonal_mode(capsys):
    code, out, _ = _capture(capsys, ["kinematic", "--so", "4", "--phi", "t"])
    assert code == 0
    assert out.splitlines() == [
        "(1,4): t(x)t^4",
        "(2,3): t^2(x)t^3",
        "(3,2): t^3(x)t^2",
        "(4,1): t^4(x)t",
    ]


def test_son(capsys):
    code, out, _ = _capture(capsys, ["son", "--n", "2", "--k", "0"])
    assert code == 0
    assert out.splitlines() == ["(0,2): 1(x)t^2", "(1,1): t(x)t", "(2,0): t^2(x)1"]


def test_positivity_csv(capsys):
    code, out, _ = _capture(capsys, ["positivity", "--n-max", "2", "--format", "csv"])
    assert code == 0
    assert out.splitlines() == [
        "n,k,positive_definite",
        "1,0,true",
        "2,0,true",
        "2,1,true",
    ]


def test_check_passes(capsys):
    code, out, _ = _capture(capsys, ["check", "--n-max", "2"])
    assert code == 0
    assert "0 failed" in out
    assert out.count("PASS") == 24


def test_check_json(capsys):
    code, out, _ = _capture(capsys, ["check", "--n-max", "1", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["failed"] == 0
    assert len(payload["entries"]) == 24


def test_outputs_are_deterministic(capsys):
    argv = ["kinematic", "--n", "3", "--format", "json"]
    _, first, _ = _capture(capsys, argv)
    _, second, _ = _capture(capsys, argv)
    assert first == second


def test_parse_error_exit_code(capsys):
    code, out, err = _capture(capsys, ["reduce", "--n", "2", "s^2*q"])
    assert code == 1
    assert not out
    assert "unexpected character 'q'" in err


def test_index_error_exit_code(capsys):
    code, _, err = _capture(capsys, ["matrix", "--n", "2", "--k", "3", "--which", "P"])
    assert code == 1
    assert "0 <= 2k <= n" in err


def test_usage_error_exit_code(capsys):
    code, _, _ = _capture(capsys, ["matrix", "--n", "2"])
    assert code == 1
    code, _, _ = _capture(capsys, ["nonsense"])
    assert code == 1


def test_kinematic_mode_flags_are_exclusive(capsys):
    code, _, err = _capture(capsys, ["kinematic", "--n", "2", "--so", "4"])
    assert code == 1
    assert "exactly one" in err
    code, _, _ = _capture(capsys, ["kinematic"])
    assert code == 1


def test_csv_limited_to_positivity(capsys):
    code, _, err = _capture(capsys, ["basis", "--n", "2", "--degree", "2", "--format", "csv"])
    assert code == 1
    assert "csv" in err


def test_help_exits_zero(capsys):
    code, out, _ = _capture(capsys, ["--help"])
    assert code == 0
    assert "basis" in out
