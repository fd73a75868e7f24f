# -*- coding: utf-8 -*-
import io
import json

import pytest

from rzk_index import cli
from rzk_index.extended_nat import Finite
from rzk_index.simplicial_core import SimplicialComplex, clear_number_caches

BOUNDARY_TRIANGLE = {
    "m": 3,
    "facets": [[1, 2], [2, 3], [1, 3]],
    "group_generators": ["111"],
}


def run(argv, stdin=None):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = cli.main(argv, stdout=stdout, stderr=stderr, stdin=stdin)
    return code, stdout.getvalue(), stderr.getvalue()


def test_analyze_json(write_problem):
    code, out, err = run(["analyze", write_problem(BOUNDARY_TRIANGLE)])
    assert code == cli.EXIT_OK
    assert err == ""
    report = json.loads(out)
    assert report["index"]["lower"] == report["index"]["upper"] == 2
    assert report["options"]["collapse_budget"] == 0
    assert "oracle" not in report


def test_analyze_is_deterministic(write_problem):
    path = write_problem(BOUNDARY_TRIANGLE)
    assert run(["analyze", path, "--oracle"]) == run(["analyze", path, "--oracle"])


def test_analyze_with_oracle(write_problem):
    code, out, _ = run(["analyze", write_problem(BOUNDARY_TRIANGLE), "--oracle"])
    assert code == cli.EXIT_OK
    oracle = json.loads(out)["oracle"]
    assert oracle["betti"] == [1, 0, 1]
    assert oracle["no_fixed_cells"]


def test_analyze_four_cycle_not_free(write_problem):
    problem = {
        "m": 4,
        "facets": [[1, 2], [2, 3], [3, 4], [1, 4]],
        "group_generators": ["1111", "1100"],
    }
    code, out, _ = run(["analyze", write_problem(problem), "--format", "text"])
    assert code == cli.EXIT_OK
    assert "not applicable (not-free, witness 1100)" in out


def test_analyze_cone(write_problem):
    problem = {
        "m": 4,
        "facets": [[1, 2, 4], [2, 3, 4], [1, 3, 4]],
        "group_generators": ["1110"],
    }
    path = write_problem(problem, "cone.yaml")
    code, out, _ = run(["analyze", path, "--format", "yaml"])
    assert code == cli.EXIT_OK
    assert "exact: true" in out


def test_analyze_with_collapse(write_problem):
    problem = {
        "m": 4,
        "facets": [[1, 2], [2, 3], [3, 4]],
        "group_generators": ["1010", "0101"],
    }
    path = write_problem(problem)
    _, out, _ = run(["analyze", path])
    assert json.loads(out)["index"]["upper"] == 2
    _, out, _ = run(["analyze", path, "--collapse"])
    report = json.loads(out)
    assert report["index"]["upper"] == 1
    assert report["collapse"]["final_dim"] == 0
    assert report["options"]["collapse_budget"] is None


def test_analyze_from_stdin():
    stdin = io.StringIO(json.dumps(BOUNDARY_TRIANGLE))
    code, out, _ = run(["analyze", "-"], stdin=stdin)
    assert code == cli.EXIT_OK
    assert json.loads(out)["problem"]["m"] == 3


@pytest.mark.parametrize(
    "problem",
    [
        dict(BOUNDARY_TRIANGLE, group_generators=["11"]),
        dict(BOUNDARY_TRIANGLE, facets=[[1, 2]]),
        dict(BOUNDARY_TRIANGLE, group_generators=[]),
        "m: [unclosed",
    ],
)
def test_input_errors(write_problem, problem):
    code, out, err = run(["analyze", write_problem(problem)])
    assert code == cli.EXIT_INPUT_ERROR
    assert out == ""
    assert err.startswith("error: ")


def test_missing_file(tmp_path):
    code, _, err = run(["analyze", str(tmp_path / "missing.json")])
    assert code == cli.EXIT_INPUT_ERROR
    assert "missing.json" in err


def test_oracle_cell_cap(write_problem):
    code, _, err = run(
        ["analyze", write_problem(BOUNDARY_TRIANGLE), "--oracle", "--max-cells", "10"]
    )
    assert code == cli.EXIT_RESOURCE_CAP
    assert "cap is 10" in err


def test_large_full_simplex(write_problem):
    path = write_problem(
        {"m": 30, "facets": [list(range(1, 31))], "group_generators": ["1" * 30]}
    )
    code, out, _ = run(["analyze", path])
    assert code == cli.EXIT_OK
    report = json.loads(out)
    assert report["complex"]["delta"] == "inf"
    assert report["index"]["applicable"] is False
    code, _, err = run(["analyze", path, "--oracle"])
    assert code == cli.EXIT_RESOURCE_CAP
    assert "at least" in err


def test_exhaustive(capsys):
    code = cli.main(["exhaustive", "--max-m", "2"])
    assert code == cli.EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] is True
    assert report["max_m"] == 2


def test_exhaustive_text():
    code, out, _ = run(
        ["exhaustive", "--max-m", "2", "--format", "text", "--threads", "2"]
    )
    assert code == cli.EXIT_OK
    assert "all pass" in out


def test_exhaustive_limit():
    code, out, err = run(["exhaustive", "--max-m", "6"])
    assert code == cli.EXIT_RESOURCE_CAP
    assert out == ""
    assert "1 to 5" in err


def test_exhaustive_reports_failures(mocker):
    clear_number_caches()
    mocker.patch.object(SimplicialComplex, "delta_number", return_value=Finite(0))
    try:
        code, out, _ = run(["exhaustive", "--max-m", "2"])
    finally:
        mocker.stopall()
        clear_number_caches()
    assert code == cli.EXIT_PROPERTY_FAILED
    assert json.loads(out)["passed"] is False


@pytest.mark.parametrize(
    "argv,budget",
    [
        (["analyze", "p.json"], 0),
        (["analyze", "p.json", "--collapse"], None),
        (["analyze", "p.json", "--collapse=5"], 5),
        (["exhaustive", "--max-m", "3"], None),
        (["exhaustive", "--max-m", "3", "--collapse", "7"], 7),
    ],
)
def test_options_from_args(argv, budget):
    args = cli.build_parser().parse_args(argv)
    assert cli.options_from_args(args).collapse_budget == budget


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze"],
        ["exhaustive"],
        ["exhaustive", "--max-m", "0"],
        ["analyze", "p.json", "--seed", "-1"],
        ["analyze", "p.json", "--format", "xml"],
    ],
)
def test_bad_arguments(argv):
    with pytest.raises(SystemExit):
        cli.build_parser().parse_args(argv)
