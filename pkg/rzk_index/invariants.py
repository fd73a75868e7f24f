# -*- coding: utf-8 -*-
import logging

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple, Union

from .collapse import CollapseCertificate, DEFAULT_RESTARTS, search_dim_reduction
from .exceptions import TrivialGroup, WidthMismatch
from .extended_nat import ExtendedNat, Finite
from .simplicial_core import SimplicialComplex, restricted_delta
from .two_torus import (
    DEFAULT_ENUMERATION_CAP,
    Freeness,
    GroupElement,
    Subtorus,
    acts_freely,
    find_covering_element,
)
from .vertex_set import VertexSet

logger = logging.getLogger(__name__)


class Certificate(Enum):
    """
    Why a bound holds. Exactness certificates are listed next to the bounds.
    """

    RANK_ONE_EXACT = "rank-one-exact"
    SUPPORT_DELTA_LOWER = "support-delta-lower"
    ELEMENT_DELTA_UPPER = "element-delta-upper"
    ELEMENT_DELTA_LOWER = "element-delta-lower"
    DIMENSION_UPPER = "dimension-upper"
    COLLAPSE_UPPER = "collapse-upper"
    ENDPOINTS_COINCIDE = "endpoints-coincide"
    NON_EDGE_PAIR = "non-edge-pair"
    EQUAL_MINIMAL_ORDERS = "equal-minimal-non-face-orders"
    FULL_SIMPLEX = "full-simplex"
    NOT_FREE = "not-free"

    @property
    def citation(self) -> str:
        """
        Published result the bound rests on, as printed in reports.

        >>> Certificate.RANK_ONE_EXACT.citation
        'Theorem 1.1'
        """
        return _CITATIONS[self]


_CITATIONS: Dict[Certificate, str] = {
    Certificate.RANK_ONE_EXACT: "Theorem 1.1",
    Certificate.SUPPORT_DELTA_LOWER: "Theorem 1.2(ii)",
    Certificate.ELEMENT_DELTA_UPPER: "Theorem 1.2(ii)",
    Certificate.ELEMENT_DELTA_LOWER: "Theorem 1.2(i)",
    Certificate.DIMENSION_UPPER: "Theorem 1.2(i)",
    Certificate.COLLAPSE_UPPER: "Proposition 1.3",
    Certificate.ENDPOINTS_COINCIDE: "Theorem 1.2",
    Certificate.NON_EDGE_PAIR: "Corollary 1.4",
    Certificate.EQUAL_MINIMAL_ORDERS: "Corollary 1.5",
    Certificate.FULL_SIMPLEX: "Theorem 1.2(ii)",
    Certificate.NOT_FREE: "Theorem 1.2(i)",
}


@dataclass(frozen=True)
class Citation:
    tag: Certificate
    witness: Any = None


@dataclass(frozen=True)
class BoundInterval:
    """
    Certified ``lower <= value <= upper``; ``exact`` once both ends agree.
    """

    lower: ExtendedNat
    upper: ExtendedNat
    lower_certificate: Citation
    upper_certificate: Citation
    exact_certificates: Tuple[Certificate, ...] = ()

    def __post_init__(self):
        if self.upper < self.lower:
            raise ValueError(
                "Bound interval [%s, %s] is empty" % (self.lower, self.upper)
            )

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> Optional[ExtendedNat]:
        return self.lower if self.exact else None


@dataclass(frozen=True)
class NotApplicable:
    """
    The index is only defined for free actions; ``witness`` fixes a point.
    """

    witness: GroupElement


@dataclass(frozen=True)
class CorollaryCheck:
    fired: bool
    element: Optional[GroupElement] = None
    pair: Optional[VertexSet] = None


@dataclass(frozen=True)
class InvariantReport:
    index: Union[BoundInterval, NotApplicable]
    coindex: BoundInterval
    weight: BoundInterval
    freeness: Freeness
    rank: int
    supp_G: VertexSet
    delta_supp_G: ExtendedNat
    per_element_deltas: Dict[GroupElement, ExtendedNat]
    flag_one: CorollaryCheck
    same_order: CorollaryCheck
    collapse: Optional[CollapseCertificate] = None
    restricted_dim: int = -1

    @property
    def corollary_flags(self) -> Tuple[Certificate, ...]:
        fired = []
        if self.flag_one.fired:
            fired.append(Certificate.NON_EDGE_PAIR)
        if self.same_order.fired:
            fired.append(Certificate.EQUAL_MINIMAL_ORDERS)
        return tuple(fired)


def restrict_to_support(
    complex_: SimplicialComplex, group: Subtorus
) -> Tuple[SimplicialComplex, Subtorus]:
    """
    ``(K_{supp(G)}, G)`` relabeled onto ``1..|supp(G)|``. All three invariants
    are unchanged: inclusion and projection between the two real
    moment-angle complexes are both equivariant.
    """
    support = group.support
    return complex_.full_subcomplex(support).complex, group.restrict(support)


def _check_widths(complex_: SimplicialComplex, group: Subtorus):
    if complex_.m != group.m:
        raise WidthMismatch(complex_.m, group.m)


def check_corollary_flag_one(
    complex_: SimplicialComplex,
    group: Subtorus,
) -> CorollaryCheck:
    """
    Fires when ``δ(K_{supp(G)}) = 1``. The witness is the first missing edge
    ``{i, j}`` of ``K_{supp(G)}`` and a non-trivial element covering it, which
    pins the coindex and weight to 1.
    """
    _check_widths(complex_, group)
    support = group.support
    if not support:
        return CorollaryCheck(False)
    vertices = support.vertices
    for index, i in enumerate(vertices):
        for j in vertices[index + 1 :]:
            pair = VertexSet.of(i, j)
            if not complex_.is_face(pair):
                element = find_covering_element(group, i, j)
                return CorollaryCheck(True, element=element, pair=pair)
    return CorollaryCheck(False)


def check_corollary_same_order(
    complex_: SimplicialComplex,
    group: Subtorus,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> CorollaryCheck:
    """
    Fires when all minimal non-faces of ``K_{supp(G)}`` have one order and
    some non-trivial ``g_0`` has ``supp(g_0)`` outside ``K``.
    """
    _check_widths(complex_, group)
    support = group.support
    if not support:
        return CorollaryCheck(False)
    restricted = complex_.full_subcomplex(support).complex
    if len(restricted.minimal_non_face_orders()) != 1:
        return CorollaryCheck(False)
    for element in group.elements(cap=cap):
        if not complex_.is_face(element.support):
            return CorollaryCheck(True, element=element)
    return CorollaryCheck(False)


def _coindex_interval(
    delta_support: ExtendedNat,
    minimum: ExtendedNat,
    minimizer: GroupElement,
    rank: int,
    flag_one: CorollaryCheck,
    same_order: CorollaryCheck,
) -> BoundInterval:
    exact: List[Certificate] = []
    if rank == 1:
        exact.append(Certificate.RANK_ONE_EXACT)
    if delta_support.is_infinite:
        exact.append(Certificate.FULL_SIMPLEX)
    if flag_one.fired:
        exact.append(Certificate.NON_EDGE_PAIR)
    if same_order.fired:
        exact.append(Certificate.EQUAL_MINIMAL_ORDERS)
    if delta_support == minimum and not exact:
        exact.append(Certificate.ENDPOINTS_COINCIDE)
    return BoundInterval(
        lower=delta_support,
        upper=minimum,
        lower_certificate=Citation(Certificate.SUPPORT_DELTA_LOWER),
        upper_certificate=Citation(Certificate.ELEMENT_DELTA_UPPER, minimizer),
        exact_certificates=tuple(exact),
    )


def analyze(
    complex_: SimplicialComplex,
    group: Subtorus,
    collapse_budget: Optional[int] = None,
    restarts: int = DEFAULT_RESTARTS,
    seed: int = 0,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> InvariantReport:
    """
    Exact values or certified intervals for the index, coindex and weight of
    the real moment-angle complex of ``K`` under ``G``.

    Parameters
    ----------
    complex_: SimplicialComplex
    group: Subtorus
        Non-trivial subgroup of the same width as ``complex_``.
    collapse_budget: Optional[int]
        Steps per collapse attempt when trying to lower the index upper bound;
        ``None`` for twice the face count, ``0`` to skip the search.
    restarts: int
        Additional collapse attempts with shuffled tie-breaking.
    seed: int
    cap: int
        Largest rank whose elements may be enumerated.

    Returns
    -------
    InvariantReport

    Examples
    --------
    >>> from rzk_index.simplicial_core import boundary_simplex
    >>> from rzk_index.two_torus import diagonal
    >>> report = analyze(boundary_simplex(3), diagonal(3))
    >>> report.index.value, report.coindex.value, report.weight.value
    (Finite(2), Finite(2), Finite(2))
    """
    _check_widths(complex_, group)
    if group.rank == 0:
        raise TrivialGroup("The trivial group has no index, coindex or weight")

    support = group.support
    restricted, _ = restrict_to_support(complex_, group)
    delta_support = restricted.delta_number()

    per_element: Dict[GroupElement, ExtendedNat] = {}
    for element in group.elements(cap=cap):
        per_element[element] = restricted_delta(complex_, element.support)

    minimizer = min(per_element, key=lambda g: per_element[g])
    maximizer = max(per_element, key=lambda g: per_element[g])
    minimum = per_element[minimizer]
    maximum = per_element[maximizer]

    freeness = acts_freely(group, complex_, cap=cap)
    flag_one = check_corollary_flag_one(complex_, group)
    same_order = check_corollary_same_order(complex_, group, cap=cap)

    coindex = _coindex_interval(
        delta_support, minimum, minimizer, group.rank, flag_one, same_order
    )
    weight = coindex

    collapse_certificate = None
    index: Union[BoundInterval, NotApplicable]
    if not freeness.free:
        assert freeness.witness is not None
        index = NotApplicable(freeness.witness)
    elif group.rank == 1:
        index = BoundInterval(
            lower=delta_support,
            upper=delta_support,
            lower_certificate=Citation(Certificate.RANK_ONE_EXACT, maximizer),
            upper_certificate=Citation(Certificate.RANK_ONE_EXACT, maximizer),
            exact_certificates=(Certificate.RANK_ONE_EXACT,),
        )
    else:
        upper = Finite(restricted.dim + 1)
        upper_citation = Citation(Certificate.DIMENSION_UPPER)
        if collapse_budget != 0 and restricted.dim >= 1:
            result = search_dim_reduction(
                restricted, budget=collapse_budget, restarts=restarts, seed=seed
            )
            if isinstance(result, CollapseCertificate):
                collapse_certificate = result
                upper = Finite(restricted.dim)
                upper_citation = Citation(Certificate.COLLAPSE_UPPER, result)
        exact = (Certificate.ENDPOINTS_COINCIDE,) if maximum == upper else ()
        index = BoundInterval(
            lower=maximum,
            upper=upper,
            lower_certificate=Citation(Certificate.ELEMENT_DELTA_LOWER, maximizer),
            upper_certificate=upper_citation,
            exact_certificates=exact,
        )

    logger.info(
        f"Analyzed rank {group.rank} group on {complex_.m} vertices: "
        f"free={freeness.free}, coindex in [{coindex.lower}, {coindex.upper}]"
    )
    return InvariantReport(
        index=index,
        coindex=coindex,
        weight=weight,
        freeness=freeness,
        rank=group.rank,
        supp_G=support,
        delta_supp_G=delta_support,
        per_element_deltas=per_element,
        flag_one=flag_one,
        same_order=same_order,
        collapse=collapse_certificate,
        restricted_dim=restricted.dim,
    )


def bounds_monotone(report: InvariantReport, sub_report: InvariantReport) -> bool:
    """
    Passing to a non-trivial subgroup ``H < G`` can only raise the
    coindex/weight bounds and, for free actions, lower the index bounds.
    ``report`` is for ``G``, ``sub_report`` for ``H``, on the same complex.
    """
    if report.coindex.upper > sub_report.coindex.upper:
        return False
    if report.delta_supp_G > sub_report.delta_supp_G:
        return False
    if isinstance(report.index, BoundInterval):
        if not isinstance(sub_report.index, BoundInterval):
            return False
        if sub_report.index.lower > report.index.lower:
            return False
    return True


__all__ = [
    "BoundInterval",
    "Certificate",
    "Citation",
    "CorollaryCheck",
    "InvariantReport",
    "NotApplicable",
    "analyze",
    "check_corollary_flag_one",
    "check_corollary_same_order",
    "restrict_to_support",
    "bounds_monotone",
]
