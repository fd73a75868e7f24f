# -*- coding: utf-8 -*-
import json
import logging

from typing import Any, Dict, List, Optional, Union

import yaml

from typing_extensions import Literal

from ..collapse import CollapseCertificate
from ..cw_oracle.cells import DEFAULT_MAX_CELLS, fixed_cells
from ..cw_oracle.homology import (
    Mod2ChainComplex,
    connectivity_degree,
    euler_characteristic,
    reduced_betti,
)
from ..invariants import (
    BoundInterval,
    Certificate,
    Citation,
    CorollaryCheck,
    InvariantReport,
    NotApplicable,
)
from ..simplicial_core import SimplicialComplex
from ..two_torus import DEFAULT_ENUMERATION_CAP, GroupElement, Subtorus
from ..options import AnalysisOptions
from .schema import ProblemFile

logger = logging.getLogger(__name__)

ReportFormat = Literal["json", "yaml", "text"]
FORMATS = ("json", "yaml", "text")


def _witness(witness: Any) -> Any:
    if witness is None:
        return None
    if isinstance(witness, GroupElement):
        return witness.to_string()
    if isinstance(witness, CollapseCertificate):
        return {"steps": len(witness.steps), "final_dim": witness.final_dim}
    return str(witness)


def _citation(citation: Citation) -> Dict[str, Any]:
    return {
        "tag": citation.tag.value,
        "citation": citation.tag.citation,
        "witness": _witness(citation.witness),
    }


def interval_to_dict(interval: Union[BoundInterval, NotApplicable]) -> Dict[str, Any]:
    if isinstance(interval, NotApplicable):
        return {
            "applicable": False,
            "reason": Certificate.NOT_FREE.value,
            "citation": Certificate.NOT_FREE.citation,
            "witness": interval.witness.to_string(),
        }
    return {
        "applicable": True,
        "lower": interval.lower.to_json(),
        "upper": interval.upper.to_json(),
        "exact": interval.exact,
        "lower_certificate": _citation(interval.lower_certificate),
        "upper_certificate": _citation(interval.upper_certificate),
        "exact_certificates": [tag.value for tag in interval.exact_certificates],
        "exact_citations": list(
            dict.fromkeys(tag.citation for tag in interval.exact_certificates)
        ),
    }


def _corollary(check: CorollaryCheck, tag: Certificate) -> Dict[str, Any]:
    return {
        "citation": tag.citation,
        "fired": check.fired,
        "pair": list(check.pair.vertices) if check.pair is not None else None,
        "element": _witness(check.element),
    }


def oracle_section(
    complex_: SimplicialComplex,
    group: Subtorus,
    max_cells: int = DEFAULT_MAX_CELLS,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Dict[str, Any]:
    """
    Cross-checks against the cell structure: Euler characteristic, mod-2
    Betti numbers, the connectivity bound and fixed cells per element.
    """
    chains = Mod2ChainComplex.from_complex(complex_, max_cells)
    betti = chains.betti_numbers()
    fixed = {
        element.to_string(): len(fixed_cells(complex_, element, max_cells))
        for element in group.elements(cap=cap)
    }
    chi = euler_characteristic(complex_)
    reduced = reduced_betti(betti)
    bound = connectivity_degree(complex_.delta_number(), len(reduced))
    alternating = sum((-1) ** degree * b for degree, b in enumerate(betti))
    return {
        "euler_characteristic": chi,
        "euler_poincare_holds": chi == alternating,
        "betti": list(betti),
        "reduced_betti": list(reduced),
        "boundary_squared_zero": chains.check_boundary_squared(),
        "connectivity_holds": not any(reduced[:bound]),
        "fixed_cells": fixed,
        "no_fixed_cells": not any(fixed.values()),
    }


def build_report(
    problem: ProblemFile,
    complex_: SimplicialComplex,
    group: Subtorus,
    result: InvariantReport,
    options: Optional[AnalysisOptions] = None,
    oracle: Optional[Dict[str, Any]] = None,
) -> Dict[str, Any]:
    """
    Plain-data report with a fixed key order; elements are listed in the
    enumeration order of the group.
    """
    report: Dict[str, Any] = {
        "problem": problem.to_dict(),
        "options": (options or AnalysisOptions()).to_dict(),
        "complex": {
            "dim": complex_.dim,
            "f_vector": list(complex_.f_vector()),
            "minimal_non_faces": [
                list(face.vertices)
                for face in sorted(
                    complex_.minimal_non_faces(), key=lambda face: face.sort_key()
                )
            ],
            "delta": complex_.delta_number().to_json(),
            "flag": complex_.flag_number().to_json(),
        },
        "group": {
            "rank": result.rank,
            "basis": [g.to_string() for g in group.basis],
            "support": list(result.supp_G.vertices),
            "delta_support": result.delta_supp_G.to_json(),
        },
        "freeness": {
            "free": result.freeness.free,
            "witness": _witness(result.freeness.witness),
        },
        "elements": [
            {
                "element": element.to_string(),
                "support": list(element.support.vertices),
                "delta": delta.to_json(),
            }
            for element, delta in result.per_element_deltas.items()
        ],
        "index": interval_to_dict(result.index),
        "coindex": interval_to_dict(result.coindex),
        "weight": interval_to_dict(result.weight),
        "corollaries": {
            Certificate.NON_EDGE_PAIR.value: _corollary(
                result.flag_one, Certificate.NON_EDGE_PAIR
            ),
            Certificate.EQUAL_MINIMAL_ORDERS.value: _corollary(
                result.same_order, Certificate.EQUAL_MINIMAL_ORDERS
            ),
        },
        "collapse": result.collapse.to_dict() if result.collapse else None,
    }
    if oracle is not None:
        report["oracle"] = oracle
    return report


def _interval_text(data: Dict[str, Any]) -> str:
    if not data["applicable"]:
        return "not applicable (%s, witness %s)" % (data["reason"], data["witness"])
    if data["exact"]:
        value = "%s (exact)" % data["lower"]
    else:
        value = "[%s, %s]" % (data["lower"], data["upper"])
    tags = [data["lower_certificate"]["tag"], data["upper_certificate"]["tag"]]
    tags.extend(data["exact_certificates"])
    citations = [
        data["lower_certificate"]["citation"],
        data["upper_certificate"]["citation"],
    ]
    citations.extend(data["exact_citations"])
    return "%s  <- %s; %s" % (
        value,
        ", ".join(dict.fromkeys(tags)),
        ", ".join(dict.fromkeys(citations)),
    )


def render_text(report: Dict[str, Any]) -> str:
    rows: List[List[str]] = []
    group = report["group"]
    complex_ = report["complex"]
    freeness = report["freeness"]
    rows.append(["m", str(report["problem"]["m"])])
    rows.append(["dim K", str(complex_["dim"])])
    rows.append(["delta(K)", str(complex_["delta"])])
    rows.append(["flag(K)", str(complex_["flag"])])
    rows.append(["rank G", str(group["rank"])])
    rows.append(["supp(G)", str(group["support"])])
    rows.append(["delta(K_supp(G))", str(group["delta_support"])])
    rows.append(
        [
            "free",
            "yes" if freeness["free"] else "no (witness %s)" % freeness["witness"],
        ]
    )
    for name in ("index", "coindex", "weight"):
        rows.append([name, _interval_text(report[name])])
    fired = [tag for tag, check in report["corollaries"].items() if check["fired"]]
    rows.append(["corollaries", ", ".join(fired) or "none"])
    if report["collapse"] is not None:
        collapse = report["collapse"]
        rows.append(
            [
                "collapse",
                "%d steps to dimension %d"
                % (len(collapse["steps"]), collapse["final_dim"]),
            ]
        )
    oracle = report.get("oracle")
    if oracle is not None:
        rows.append(["euler characteristic", str(oracle["euler_characteristic"])])
        rows.append(["betti (mod 2)", str(oracle["betti"])])
        connectivity = "ok" if oracle["connectivity_holds"] else "FAILED"
        rows.append(["connectivity", connectivity])

    width = max(len(label) for label, _ in rows)
    lines = ["%s  %s" % (label.ljust(width), value) for label, value in rows]
    lines.append("")
    lines.append("element  support  delta")
    for entry in report["elements"]:
        lines.append(
            "%s  %s  %s" % (entry["element"], entry["support"], entry["delta"])
        )
    return "\n".join(lines) + "\n"


def render(report: Dict[str, Any], fmt: ReportFormat = "json") -> str:
    """
    Serialize a report. Key order is kept in every format.
    """
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "yaml":
        return yaml.safe_dump(report, sort_keys=False, default_flow_style=None)
    if fmt == "text":
        return render_text(report)
    raise ValueError("Unknown report format %r, expected one of %s" % (fmt, FORMATS))


def render_exhaustive_text(report: Dict[str, Any]) -> str:
    properties = report["properties"]
    width = max([len(entry["name"]) for entry in properties] + [len("property")])
    lines = [
        "exhaustive suites up to m = %d: %s"
        % (report["max_m"], "all pass" if report["passed"] else "FAILURES"),
        "",
        "%s  %8s  %s" % ("property".ljust(width), "checked", "verdict"),
    ]
    for entry in properties:
        verdict = "ok" if entry["passed"] else "FAIL " + entry["counterexample"]
        lines.append(
            "%s  %8d  %s" % (entry["name"].ljust(width), entry["checked"], verdict)
        )
    return "\n".join(lines) + "\n"


def render_exhaustive(report: Dict[str, Any], fmt: ReportFormat = "json") -> str:
    if fmt == "text":
        return render_exhaustive_text(report)
    return render(report, fmt)
