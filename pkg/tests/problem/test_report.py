# -*- coding: utf-8 -*-
import json

import pytest
import yaml

from rzk_index.invariants import analyze
from rzk_index.options import AnalysisOptions
from rzk_index.problem.report import (
    build_report,
    interval_to_dict,
    oracle_section,
    render,
    render_exhaustive,
)
from rzk_index.problem.schema import ProblemFile
from rzk_index.properties import run_exhaustive
from rzk_index.two_torus import Subtorus, diagonal

KEYS = [
    "problem",
    "options",
    "complex",
    "group",
    "freeness",
    "elements",
    "index",
    "coindex",
    "weight",
    "corollaries",
    "collapse",
]


def make_report(complex_, group, oracle=False, **kwargs):
    problem = ProblemFile.from_objects(complex_, group)
    result = analyze(complex_, group, **kwargs)
    section = oracle_section(complex_, group) if oracle else None
    return build_report(problem, complex_, group, result, AnalysisOptions(), section)


def test_report_structure(boundary_triangle):
    report = make_report(boundary_triangle, diagonal(3))
    assert list(report) == KEYS
    assert report["complex"] == {
        "dim": 1,
        "f_vector": [1, 3, 3],
        "minimal_non_faces": [[1, 2, 3]],
        "delta": 2,
        "flag": 2,
    }
    assert report["group"]["support"] == [1, 2, 3]
    assert report["freeness"] == {"free": True, "witness": None}
    assert report["elements"] == [{"element": "111", "support": [1, 2, 3], "delta": 2}]
    assert report["index"]["exact"]
    assert report["index"]["lower"] == report["index"]["upper"] == 2
    assert report["index"]["exact_certificates"] == ["rank-one-exact"]
    assert report["index"]["exact_citations"] == ["Theorem 1.1"]
    assert report["index"]["upper_certificate"]["citation"] == "Theorem 1.1"
    assert "Theorem 1.1" in report["coindex"]["exact_citations"]
    corollaries = report["corollaries"]
    assert corollaries["equal-minimal-non-face-orders"]["fired"]
    assert corollaries["equal-minimal-non-face-orders"]["citation"] == "Corollary 1.5"
    assert not corollaries["non-edge-pair"]["fired"]
    assert corollaries["non-edge-pair"]["citation"] == "Corollary 1.4"
    assert report["collapse"] is None


def test_not_free_index(four_cycle):
    report = make_report(four_cycle, Subtorus.from_strings(["1111", "1100"]))
    assert report["index"] == {
        "applicable": False,
        "reason": "not-free",
        "citation": "Theorem 1.2(i)",
        "witness": "1100",
    }
    assert report["freeness"] == {"free": False, "witness": "1100"}
    assert report["coindex"]["lower"] == report["coindex"]["upper"] == 1
    assert report["coindex"]["upper_certificate"] == {
        "tag": "element-delta-upper",
        "citation": "Theorem 1.2(ii)",
        "witness": "1111",
    }
    assert [entry["delta"] for entry in report["elements"]] == ["inf", 1, "inf"]


def test_collapse_in_report(path4):
    report = make_report(path4, Subtorus.from_strings(["1010", "0101"]))
    assert report["index"]["upper_certificate"]["tag"] == "collapse-upper"
    assert report["index"]["upper_certificate"]["citation"] == "Proposition 1.3"
    assert report["index"]["lower_certificate"]["citation"] == "Theorem 1.2(i)"
    assert report["index"]["upper_certificate"]["witness"] == {
        "steps": 3,
        "final_dim": 0,
    }
    assert report["collapse"]["final_dim"] == 0
    assert report["collapse"]["steps"][0] == {"sigma": [1, 2], "tau": [1]}


def test_interval_to_dict_infinite():
    from rzk_index.simplicial_core import full_simplex

    result = analyze(full_simplex(2), diagonal(2))
    data = interval_to_dict(result.coindex)
    assert data["lower"] == data["upper"] == "inf"
    assert "full-simplex" in data["exact_certificates"]


def test_oracle_section(boundary_triangle, four_cycle):
    oracle = oracle_section(boundary_triangle, diagonal(3))
    assert oracle == {
        "euler_characteristic": 2,
        "euler_poincare_holds": True,
        "betti": [1, 0, 1],
        "reduced_betti": [0, 0, 1],
        "boundary_squared_zero": True,
        "connectivity_holds": True,
        "fixed_cells": {"111": 0},
        "no_fixed_cells": True,
    }
    oracle = oracle_section(four_cycle, Subtorus.from_strings(["1111", "1100"]))
    assert oracle["fixed_cells"] == {"1100": 4, "1111": 0, "0011": 4}
    assert not oracle["no_fixed_cells"]


@pytest.mark.parametrize("fmt", ["json", "yaml"])
def test_render_round_trips(boundary_triangle, fmt):
    report = make_report(boundary_triangle, diagonal(3), oracle=True)
    text = render(report, fmt)
    loaded = json.loads(text) if fmt == "json" else yaml.safe_load(text)
    assert loaded == report
    assert list(loaded) == KEYS + ["oracle"]
    assert render(report, fmt) == text


def test_render_text(four_cycle):
    report = make_report(four_cycle, Subtorus.from_strings(["1111", "1100"]))
    text = render(report, "text")
    assert "not applicable (not-free, witness 1100)" in text
    assert "1 (exact)" in text
    assert "non-edge-pair" in text
    assert "Corollary 1.4" in text
    assert text.endswith("0011  [3, 4]  inf\n")


def test_render_unknown_format(boundary_triangle):
    with pytest.raises(ValueError):
        render(make_report(boundary_triangle, diagonal(3)), "xml")


def test_render_exhaustive():
    data = run_exhaustive(2).to_dict()
    text = render_exhaustive(data, "text")
    assert text.startswith("exhaustive suites up to m = 2: all pass")
    assert "support-product-law" in text
    assert json.loads(render_exhaustive(data, "json")) == data
