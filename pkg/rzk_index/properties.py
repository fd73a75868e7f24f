# -*- coding: utf-8 -*-
"""
Exhaustive property suites over every small complex and subgroup.

Each suite maps a worker over the complexes and collects observations
``(property, holds, counterexample)``; results keep the first counterexample
in enumeration order, whatever the number of threads.
"""
import logging

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .collapse import CollapseCertificate, free_pairs, replay, search_dim_reduction
from .cw_oracle.cells import act, barycenter, build_cells
from .cw_oracle.homology import (
    Mod2ChainComplex,
    connectivity_degree,
    euler_characteristic,
    reduced_betti,
)
from .enumeration import MAX_EXHAUSTIVE_VERTICES, iter_complexes, nontrivial_subtori
from .exceptions import EnumerationLimit
from .extended_nat import Finite, INFINITY
from .invariants import (
    BoundInterval,
    InvariantReport,
    analyze,
    bounds_monotone,
    restrict_to_support,
)
from .options import AnalysisOptions
from .simplicial_core import SimplicialComplex, boundary_simplex, cone, restricted_delta
from .two_torus import GroupElement, Subtorus, acts_freely, find_covering_element
from .vertex_set import VertexSet, compress, popcount

logger = logging.getLogger(__name__)

# suites which analyze every subgroup stop at four vertices
MAX_GROUP_SUITE_VERTICES = 4

Observation = Tuple[str, bool, Optional[str]]


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: bool
    checked: int
    counterexample: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": self.counterexample,
        }


@dataclass(frozen=True)
class ExhaustiveReport:
    max_m: int
    results: Tuple[PropertyResult, ...]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def to_dict(self) -> dict:
        return {
            "max_m": self.max_m,
            "passed": self.passed,
            "properties": [result.to_dict() for result in self.results],
        }


def _describe(complex_: SimplicialComplex, group: Optional[Subtorus] = None) -> str:
    if group is None:
        return repr(complex_)
    return "%r with %r" % (complex_, group)


def _observe(name: str, holds: bool, describe: Callable[[], str]) -> Observation:
    return name, holds, None if holds else describe()


def _brute_force_delta(complex_: SimplicialComplex):
    sizes = [
        popcount(bits)
        for bits in range(1 << complex_.m)
        if not complex_.is_face(VertexSet(bits))
    ]
    return Finite(min(sizes) - 1) if sizes else INFINITY


def check_combinatorics(complex_: SimplicialComplex) -> List[Observation]:
    """
    δ/flag numbers against brute force, and their monotonicity and
    equality laws.
    """

    def describe() -> str:
        return _describe(complex_)

    observations = []
    delta = complex_.delta_number()
    flag = complex_.flag_number()
    minimal = complex_.minimal_non_faces()

    observations.append(
        _observe(
            "delta-matches-brute-force",
            delta == _brute_force_delta(complex_),
            describe,
        )
    )
    observations.append(_observe("delta-at-most-flag", delta <= flag, describe))

    minimal_ok = all(
        not complex_.is_face(face)
        and all(complex_.is_face(face.remove(vertex)) for vertex in face)
        for face in minimal
    )
    observations.append(_observe("minimal-non-faces-are-minimal", minimal_ok, describe))

    orders = complex_.minimal_non_face_orders()
    equal_orders = len(orders) <= 1
    observations.append(
        _observe(
            "equal-orders-iff-delta-equals-flag",
            equal_orders == (delta == flag),
            describe,
        )
    )

    for q in range(complex_.m):
        brute = all(
            complex_.is_face(VertexSet(bits))
            for bits in range(1 << complex_.m)
            if popcount(bits) <= q + 1
        )
        if complex_.is_q_neighborly(q) != brute:
            observations.append(
                ("neighborly-matches-brute-force", False, "%s, q=%d" % (describe(), q))
            )
            break
    else:
        observations.append(("neighborly-matches-brute-force", True, None))

    monotone = True
    witness = None
    for bits in range(1, 1 << complex_.m):
        index_set = VertexSet(bits)
        if complex_.is_face(index_set):
            continue
        sub = complex_.full_subcomplex(index_set).complex
        if not (delta <= sub.delta_number() and sub.flag_number() <= flag):
            monotone = False
            witness = "%s, I=%s" % (describe(), index_set)
            break
    observations.append(("restriction-monotone", monotone, witness))

    # restricting to I and then to J inside I is restricting to J
    direct = {
        bits: complex_.full_subcomplex(VertexSet(bits))
        for bits in range(1, 1 << complex_.m)
    }
    nested = True
    witness = None
    for outer_bits, outer in direct.items():
        inner_bits = outer_bits
        while inner_bits:
            inner = outer.complex.full_subcomplex(
                VertexSet(compress(inner_bits, outer_bits))
            )
            expected = direct[inner_bits]
            composed = tuple(outer.vertices[v - 1] for v in inner.vertices)
            if inner.complex != expected.complex or composed != expected.vertices:
                nested = False
                witness = "%s, I=%s, J=%s" % (
                    describe(),
                    VertexSet(outer_bits),
                    VertexSet(inner_bits),
                )
                break
            inner_bits = (inner_bits - 1) & outer_bits
        if not nested:
            break
    observations.append(("nested-restriction", nested, witness))
    return observations


def check_groups(groups: Sequence[Subtorus]) -> List[Observation]:
    """
    Support law for products, canonical bases and covering elements
    """
    observations = []
    for group in groups:
        elements = group.nontrivial_elements()

        law = True
        for g in elements:
            for h in elements:
                product = g * h
                if product.support.bits != g.bits ^ h.bits:
                    law = False
                only_g = g.support - h.support
                only_h = h.support - g.support
                for i in only_g:
                    for j in only_h:
                        if i not in product.support or j not in product.support:
                            law = False
        observations.append(_observe("support-product-law", law, lambda: repr(group)))

        rebuilt = Subtorus(group.m, elements)
        canonical = (
            rebuilt == group
            and len(elements) == group.order - 1
            and len(set(elements)) == len(elements)
            and all(group.contains(g) for g in elements)
        )
        observations.append(_observe("canonical-basis", canonical, lambda: repr(group)))

        support = group.support.vertices
        covering = True
        for index, i in enumerate(support):
            for j in support[index + 1 :]:
                element = find_covering_element(group, i, j)
                if element is None or not {i, j} <= set(element.support):
                    covering = False
        observations.append(_observe("covering-element", covering, lambda: repr(group)))
    return observations


def check_freeness(
    complex_: SimplicialComplex, groups: Sequence[Subtorus], max_cells: int
) -> List[Observation]:
    """
    ``acts_freely`` against the cells fixed by every non-trivial element; the
    fixed-cell criterion itself is checked on barycenters.
    """
    m = complex_.m
    cells = build_cells(complex_, max_cells)
    points = [barycenter(cell, m) for cell in cells]
    fixed_by_support: Dict[int, int] = {}
    criterion = True
    for support in range(1 << m):
        element = GroupElement(support, m)
        count = 0
        for cell, point in zip(cells, points):
            fixed = bool((act(element, point) == point).all())
            if fixed != element.support.is_subset(cell.sigma):
                criterion = False
            count += fixed
        fixed_by_support[support] = count
    observations = [
        _observe("fixed-cell-criterion", criterion, lambda: _describe(complex_))
    ]
    for group in groups:
        free = acts_freely(group, complex_).free
        no_fixed = all(fixed_by_support[g.bits] == 0 for g in group.elements())
        observations.append(
            _observe(
                "freeness-matches-fixed-cells",
                free == no_fixed,
                lambda: _describe(complex_, group),
            )
        )
    return observations


def check_homology(complex_: SimplicialComplex, max_cells: int) -> List[Observation]:
    def describe() -> str:
        return _describe(complex_)

    chains = Mod2ChainComplex.from_complex(complex_, max_cells)
    betti = chains.betti_numbers()
    reduced = reduced_betti(betti)
    alternating = sum((-1) ** degree * b for degree, b in enumerate(betti))
    bound = connectivity_degree(complex_.delta_number(), len(reduced))
    return [
        _observe("boundary-squared-zero", chains.check_boundary_squared(), describe),
        _observe(
            "euler-poincare", alternating == euler_characteristic(complex_), describe
        ),
        _observe(
            "connectivity-below-delta",
            all(reduced[degree] == 0 for degree in range(bound)),
            describe,
        ),
        _observe(
            "connected-and-bounded",
            betti[0] == 1 and len(betti) == complex_.dim + 2,
            describe,
        ),
    ]


def _interval_bounds(interval) -> Optional[tuple]:
    if isinstance(interval, BoundInterval):
        return interval.lower, interval.upper
    return None


def _same_after_restriction(
    report: InvariantReport, restricted: InvariantReport, support: VertexSet
) -> bool:
    relabeled = {
        compress(g.bits, support.bits): delta
        for g, delta in report.per_element_deltas.items()
    }
    restricted_deltas = {
        g.bits: delta for g, delta in restricted.per_element_deltas.items()
    }
    return (
        report.freeness.free == restricted.freeness.free
        and report.rank == restricted.rank
        and report.delta_supp_G == restricted.delta_supp_G
        and _interval_bounds(report.index) == _interval_bounds(restricted.index)
        and _interval_bounds(report.coindex) == _interval_bounds(restricted.coindex)
        and _interval_bounds(report.weight) == _interval_bounds(restricted.weight)
        and report.corollary_flags == restricted.corollary_flags
        and relabeled == restricted_deltas
    )


def check_invariants(
    complex_: SimplicialComplex,
    groups: Sequence[Subtorus],
    options: AnalysisOptions,
) -> List[Observation]:
    """
    Bound sandwiches, corollary certificates, rank-one exactness, restriction
    invariance and subgroup monotonicity for every subgroup
    """
    observations: List[Observation] = []
    reports: Dict[Subtorus, InvariantReport] = {
        group: analyze(complex_, group, collapse_budget=0) for group in groups
    }
    for group, report in reports.items():

        def describe() -> str:
            return _describe(complex_, group)

        deltas = list(report.per_element_deltas.values())
        observations.append(
            _observe(
                "sandwich",
                all(report.delta_supp_G <= delta for delta in deltas)
                and report.coindex.lower <= report.coindex.upper
                and report.coindex.upper == report.weight.upper == min(deltas),
                describe,
            )
        )
        if report.freeness.free:
            observations.append(
                _observe(
                    "index-at-most-dimension",
                    max(deltas) <= Finite(complex_.dim + 1),
                    describe,
                )
            )

        flag_one = report.flag_one
        if flag_one.fired:
            pair = flag_one.pair
            element = flag_one.element
            holds = (
                report.coindex.lower == report.coindex.upper == Finite(1)
                and pair is not None
                and element is not None
                and pair.is_subset(element.support)
                and not complex_.is_face(pair)
                and pair.is_subset(report.supp_G)
            )
            observations.append(_observe("corollary-non-edge-pair", holds, describe))

        same_order = report.same_order
        if same_order.fired:
            holds = report.coindex.lower == report.coindex.upper == report.delta_supp_G
            observations.append(
                _observe("corollary-equal-minimal-orders", holds, describe)
            )

        if report.rank == 1:
            (element,) = group.basis
            value = restricted_delta(complex_, element.support)
            holds = report.coindex.lower == report.coindex.upper == value
            if isinstance(report.index, BoundInterval):
                holds = holds and report.index.lower == report.index.upper == value
            observations.append(_observe("rank-one-exact", holds, describe))

        restricted_complex, restricted_group = restrict_to_support(complex_, group)
        restricted = analyze(restricted_complex, restricted_group, collapse_budget=0)
        observations.append(
            _observe(
                "restriction-invariance",
                _same_after_restriction(report, restricted, report.supp_G),
                describe,
            )
        )

        monotone = all(
            bounds_monotone(report, reports[Subtorus(group.m, [g])])
            for g in group.elements()
        )
        observations.append(_observe("subgroup-monotonicity", monotone, describe))

        if report.freeness.free and report.rank >= 2 and report.restricted_dim >= 1:
            improved = analyze(
                complex_,
                group,
                collapse_budget=options.collapse_budget,
                restarts=options.restarts,
                seed=options.seed,
            )
            holds = improved.collapse is None or (
                isinstance(improved.index, BoundInterval)
                and improved.index.upper == Finite(improved.restricted_dim)
            )
            observations.append(
                _observe("collapse-lowers-index-bound", holds, describe)
            )
    return observations


def _certificate_valid(
    complex_: SimplicialComplex, certificate: CollapseCertificate
) -> bool:
    current = SimplicialComplex(complex_.m, complex_.facets, allow_ghosts=True)
    for step in certificate.steps:
        if step not in free_pairs(current):
            return False
        before = len(current.faces)
        current = replay(current, [step])
        if len(current.faces) != before - 2:
            return False
    return current.dim == certificate.final_dim < complex_.dim


def check_collapse(
    complex_: SimplicialComplex, options: AnalysisOptions
) -> List[Observation]:
    """
    Cones over ``K`` collapse, and every certificate found for ``K`` replays
    """
    observations: List[Observation] = []
    search = partial(
        search_dim_reduction,
        budget=options.collapse_budget,
        restarts=options.restarts,
        seed=options.seed,
    )
    if complex_.m < MAX_EXHAUSTIVE_VERTICES:
        coned = cone(complex_)
        result = search(coned)
        holds = isinstance(result, CollapseCertificate) and _certificate_valid(
            coned, result
        )
        observations.append(
            _observe("cone-collapses", holds, lambda: _describe(coned))
        )
    if complex_.dim >= 1:
        result = search(complex_)
        if isinstance(result, CollapseCertificate):
            observations.append(
                _observe(
                    "certificate-replays",
                    _certificate_valid(complex_, result),
                    lambda: _describe(complex_),
                )
            )
    return observations


def check_sphere_boundaries(max_m: int, options: AnalysisOptions) -> List[Observation]:
    observations = []
    for m in range(3, max_m + 1):
        sphere = boundary_simplex(m)
        result = search_dim_reduction(
            sphere,
            budget=options.collapse_budget,
            restarts=options.restarts,
            seed=options.seed,
        )
        observations.append(
            _observe(
                "sphere-boundary-exhausted",
                not isinstance(result, CollapseCertificate),
                lambda: _describe(sphere),
            )
        )
    return observations


class _Tally:
    def __init__(self):
        self.order: List[str] = []
        self.checked: Dict[str, int] = {}
        self.failures: Dict[str, str] = {}

    def add(self, observations: Iterable[Observation]):
        for name, holds, counterexample in observations:
            if name not in self.checked:
                self.order.append(name)
                self.checked[name] = 0
            self.checked[name] += 1
            if not holds and name not in self.failures:
                logger.warning(f"Property {name} fails on {counterexample}")
                self.failures[name] = counterexample or "unknown"

    def results(self) -> Tuple[PropertyResult, ...]:
        return tuple(
            PropertyResult(
                name,
                name not in self.failures,
                self.checked[name],
                self.failures.get(name),
            )
            for name in self.order
        )


def _map(
    worker: Callable[[SimplicialComplex], List[Observation]],
    complexes: Sequence[SimplicialComplex],
    threads: int,
) -> Iterable[List[Observation]]:
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            return list(executor.map(worker, complexes))
    return map(worker, complexes)


def run_exhaustive(
    max_m: int, options: Optional[AnalysisOptions] = None
) -> ExhaustiveReport:
    """
    Run every property suite on all complexes with at most ``max_m``
    vertices. Suites that analyze every subgroup stop at four vertices.

    Raises
    ------
    EnumerationLimit
        If ``max_m`` is outside ``1..5``.
    """
    if not 1 <= max_m <= MAX_EXHAUSTIVE_VERTICES:
        raise EnumerationLimit(
            "Exhaustive suites support 1 to %d vertices, got %d"
            % (MAX_EXHAUSTIVE_VERTICES, max_m)
        )
    options = options or AnalysisOptions()
    tally = _Tally()
    for m in range(1, max_m + 1):
        complexes = list(iter_complexes(m))
        groups = nontrivial_subtori(m)
        logger.info(
            f"Checking {len(complexes)} complexes and {len(groups)} subgroups on {m} vertices"
        )
        tally.add(check_groups(groups))
        workers: List[Callable[[SimplicialComplex], List[Observation]]] = [
            check_combinatorics,
            partial(check_homology, max_cells=options.max_cells),
            partial(check_collapse, options=options),
        ]
        if m <= MAX_GROUP_SUITE_VERTICES:
            workers.append(
                partial(check_freeness, groups=groups, max_cells=options.max_cells)
            )
            workers.append(partial(check_invariants, groups=groups, options=options))
        for worker in workers:
            for observations in _map(worker, complexes, options.threads):
                tally.add(observations)
    tally.add(check_sphere_boundaries(max_m, options))
    report = ExhaustiveReport(max_m, tally.results())
    logger.info(
        f"Exhaustive run up to {max_m} vertices: "
        f"{sum(r.passed for r in report.results)}/{len(report.results)} properties hold"
    )
    return report
