import json
from pathlib import Path

import pytest

from toricgit.cli import main, parse_problem
from toricgit.errors import ProblemFileError
from toricgit.serialize import canonical_dumps

FIXTURES = Path(__file__).resolve().parent.parent / "problems"


def run_cli(args, capsys):
    code = main([str(a) for a in args])
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_problem_fixture():
    problem = parse_problem(FIXTURES / "theorem41.json")
    assert problem["variables"] == ["X", "Y", "Z", "W"]
    assert problem["sweep_box"] == [[1, 4], [-2, 2]]


def test_parse_problem_row_length_error(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"variables": ["X", "Y"], "action_rows": [[1, 2, 3]], "alpha": [1]}')
    with pytest.raises(ProblemFileError) as err:
        parse_problem(bad)
    assert "action_rows[0]" in str(err.value)


def test_parse_problem_syntax_error(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"variables": [,]}')
    with pytest.raises(ProblemFileError) as err:
        parse_problem(bad)
    assert "line 1" in str(err.value)


def test_cmd_invariants(capsys):
    code, out, err = run_cli(["invariants", FIXTURES / "theorem41.json"], capsys)
    assert code == 0
    for name in ("X^2Z", "XYZ", "Y^2Z", "Z^2W"):
        assert name in out


def test_cmd_invariants_bad_file_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"variables": ["X"], "action_rows": [[1, 1]], "alpha": [1]}')
    code, out, err = run_cli(["invariants", bad], capsys)
    assert code == 2
    assert "error" in err and not out


def test_cmd_quotient_report(capsys, tmp_path):
    json_path = tmp_path / "report.json"
    svg_path = tmp_path / "picture.svg"
    code, out, err = run_cli(
        ["quotient", FIXTURES / "theorem41.json", "--json", json_path, "--svg", svg_path],
        capsys,
    )
    assert code == 0
    assert "CP_{1,1,2}" in out
    assert "{Z = 0}" in out
    payload = json.loads(json_path.read_text())
    assert payload["identification"]["weights"] == [1, 1, 2]
    svg = svg_path.read_text()
    assert svg.startswith("<svg") and "X^2Z" in svg


def test_cmd_quotient_lattice_fixture(capsys):
    code, out, err = run_cli(["quotient", FIXTURES / "remark2_lattice.json"], capsys)
    assert code == 0
    assert "CP_1" in out
    assert "mode: lattice" in out
    assert "mode discrepancy" in out


def test_cmd_quotient_wps_fixture(capsys):
    code, out, err = run_cli(["quotient", FIXTURES / "wps112.json"], capsys)
    assert code == 0
    assert "{X = Y = Z = 0}" in out
    assert "CP_{1,1,2}" in out


def test_global_flags_override(capsys):
    code, out, err = run_cli(
        ["--mode", "lattice", "--degree-bound", "5", "quotient", FIXTURES / "theorem41.json"],
        capsys,
    )
    assert code == 0
    assert "mode: lattice" in out


def test_cmd_sweep_table_and_json(capsys, tmp_path):
    json_path = tmp_path / "sweep.json"
    code, out, err = run_cli(
        ["sweep", FIXTURES / "theorem41.json", "--json", json_path], capsys
    )
    assert code == 0
    assert "groups" in out
    payload = json.loads(json_path.read_text())
    assert payload["groups"]
    dims = [g["unstable_dimension"] for g in payload["groups"]]
    assert dims == sorted(dims)


def test_cmd_sweep_without_box(capsys):
    code, out, err = run_cli(["sweep", FIXTURES / "wps112.json"], capsys)
    assert code == 2
    assert "sweep_box" in err


def test_json_round_trip_byte_identical(tmp_path, capsys):
    json_path = tmp_path / "report.json"
    code, _, _ = run_cli(
        ["quotient", FIXTURES / "wps112.json", "--json", json_path], capsys
    )
    assert code == 0
    raw = json_path.read_text()
    assert canonical_dumps(json.loads(raw)) == raw


def test_svg_requires_2d(tmp_path, capsys):
    problem = tmp_path / "p1.json"
    problem.write_text(
        '{"variables": ["X", "Y"], "action_rows": [[1, 1]], "alpha": [1]}'
    )
    code, out, err = run_cli(
        ["quotient", problem, "--svg", tmp_path / "no.svg"], capsys
    )
    assert code == 1
    assert "2-D" in err
