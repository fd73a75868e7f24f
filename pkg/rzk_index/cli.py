# -*- coding: utf-8 -*-
"""
Command line front end.

    rzk-index analyze problem.json [--oracle] [--collapse[=N]] [--format text]
    rzk-index exhaustive --max-m 4 [--threads 4]

Exit codes: 0 success, 1 a cross-check or property failed, 2 bad input,
3 a resource cap was hit.
"""
import argparse
import logging
import sys

from typing import Any, Dict, List, Optional, TextIO

from .exceptions import InputError, ResourceCapError
from .invariants import analyze
from .options import AnalysisOptions
from .problem.report import (
    FORMATS,
    build_report,
    oracle_section,
    render,
    render_exhaustive,
)
from .problem.schema import parse_problem
from .properties import run_exhaustive

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PROPERTY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_CAP = 3

# --collapse given without a budget
_DEFAULT_BUDGET = -1


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got %r" % text)
    if value < 0:
        raise argparse.ArgumentTypeError(
            "expected a non-negative integer, got %d" % value
        )
    return value


def _positive(text: str) -> int:
    value = _non_negative(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer, got 0")
    return value


def _add_common_arguments(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--collapse",
        nargs="?",
        const=_DEFAULT_BUDGET,
        default=None,
        type=_non_negative,
        metavar="BUDGET",
        help="Search for a collapse to improve the index upper bound; "
        "BUDGET caps the steps per attempt (default: twice the face count)",
    )
    parser.add_argument("--seed", type=_non_negative, default=0)
    parser.add_argument(
        "--restarts",
        type=_non_negative,
        default=AnalysisOptions().restarts,
        help="Extra collapse attempts with shuffled tie-breaking",
    )
    parser.add_argument(
        "--max-cells",
        type=_positive,
        default=AnalysisOptions().max_cells,
        help="Largest cell count the cellular oracle may build",
    )
    parser.add_argument("--format", choices=FORMATS, default="json")
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rzk-index",
        description="Index, coindex and weight bounds for real moment-angle "
        "complexes under 2-torus actions",
    )
    subparsers = parser.add_subparsers(dest="command")
    subparsers.required = True

    analyze_parser = subparsers.add_parser(
        "analyze", help="Analyze one problem file (YAML or JSON, '-' for stdin)"
    )
    analyze_parser.add_argument("problem")
    analyze_parser.add_argument(
        "--oracle",
        action="store_true",
        help="Cross-check against the cell structure",
    )
    _add_common_arguments(analyze_parser)

    exhaustive_parser = subparsers.add_parser(
        "exhaustive", help="Run the property suites on every small complex"
    )
    exhaustive_parser.add_argument("--max-m", type=_positive, required=True)
    exhaustive_parser.add_argument("--threads", type=_positive, default=1)
    _add_common_arguments(exhaustive_parser)
    return parser


def options_from_args(args: argparse.Namespace) -> AnalysisOptions:
    """
    Without ``--collapse`` the search is skipped for ``analyze``; the
    exhaustive suites always search, with the default budget.
    """
    if args.collapse is None:
        budget: Optional[int] = 0 if args.command == "analyze" else None
    elif args.collapse == _DEFAULT_BUDGET:
        budget = None
    else:
        budget = args.collapse
    return AnalysisOptions(
        collapse_budget=budget,
        restarts=args.restarts,
        seed=args.seed,
        max_cells=args.max_cells,
        oracle=getattr(args, "oracle", False),
        threads=getattr(args, "threads", 1),
    )


def _read(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise InputError("Unable to read problem file %s: %s" % (path, e))


def _oracle_consistent(report: Dict[str, Any]) -> bool:
    oracle = report.get("oracle")
    if oracle is None:
        return True
    return (
        oracle["euler_poincare_holds"]
        and oracle["boundary_squared_zero"]
        and oracle["connectivity_holds"]
        and oracle["no_fixed_cells"] == report["freeness"]["free"]
    )


def run_analyze(
    problem_path: str, options: AnalysisOptions, stdin: Optional[TextIO] = None
) -> Dict[str, Any]:
    text = _read(problem_path, stdin or sys.stdin)
    problem = parse_problem(text, source=problem_path)
    complex_ = problem.to_complex()
    group = problem.to_group()
    result = analyze(
        complex_,
        group,
        collapse_budget=options.collapse_budget,
        restarts=options.restarts,
        seed=options.seed,
        cap=options.enumeration_cap,
    )
    oracle = None
    if options.oracle:
        oracle = oracle_section(
            complex_, group, options.max_cells, options.enumeration_cap
        )
    return build_report(problem, complex_, group, result, options, oracle)


def main(
    argv: Optional[List[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
    stdin: Optional[TextIO] = None,
) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        options = options_from_args(args)
        if args.command == "analyze":
            report = run_analyze(args.problem, options, stdin)
            output = render(report, args.format)
            code = EXIT_OK if _oracle_consistent(report) else EXIT_PROPERTY_FAILED
        else:
            exhaustive = run_exhaustive(args.max_m, options)
            output = render_exhaustive(exhaustive.to_dict(), args.format)
            code = EXIT_OK if exhaustive.passed else EXIT_PROPERTY_FAILED
    except InputError as e:
        logger.debug("Input error", exc_info=True)
        print("error: %s" % e, file=stderr)
        return EXIT_INPUT_ERROR
    except ResourceCapError as e:
        logger.debug("Resource cap", exc_info=True)
        print("error: %s" % e, file=stderr)
        return EXIT_RESOURCE_CAP
    stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
