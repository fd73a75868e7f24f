# -*- coding: utf-8 -*-
import logging
import random

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from .exceptions import NotAFreePair
from .simplicial_core import SimplicialComplex, maximal_elements
from .vertex_set import VertexSet, iter_positions, popcount

logger = logging.getLogger(__name__)

DEFAULT_RESTARTS = 8


@dataclass(frozen=True)
class CollapseStep:
    """
    Elementary collapsing pair: ``tau`` is a face whose only proper superface
    is ``sigma``. Uniqueness forces ``|sigma| = |tau| + 1``.
    """

    sigma: VertexSet
    tau: VertexSet

    def __post_init__(self):
        if not self.tau.is_proper_subset(self.sigma):
            raise NotAFreePair(
                "%s is not a proper subset of %s" % (self.tau, self.sigma)
            )
        if len(self.sigma) != len(self.tau) + 1:
            raise NotAFreePair(
                "Collapsing pair (%s, %s) is not of codimension one"
                % (self.sigma, self.tau)
            )

    def to_dict(self) -> dict:
        return {"sigma": list(self.sigma.vertices), "tau": list(self.tau.vertices)}


@dataclass(frozen=True)
class CollapseCertificate:
    """
    Replayable sequence of elementary collapses.

    ``final_dim`` is the dimension of the complex ``L`` reached;
    ``retract_dim`` the dimension of the equivariant deformation retract of
    the real moment-angle complex built along the way: the retract keeps one
    subcomplex of dimension ``dim sigma`` per step next to the moment-angle
    complex of ``L``.
    """

    steps: Tuple[CollapseStep, ...]
    initial_dim: int
    final_dim: int
    retract_dim: int

    def to_dict(self) -> dict:
        return {
            "steps": [step.to_dict() for step in self.steps],
            "initial_dim": self.initial_dim,
            "final_dim": self.final_dim,
            "retract_dim": self.retract_dim,
        }


@dataclass(frozen=True)
class Exhausted:
    """
    The search ran out of budget or free pairs. This refutes nothing.
    """

    restarts: int
    steps_tried: int
    best_dim: int
    attempts: Tuple[int, ...] = field(default=())


SearchResult = Union[CollapseCertificate, Exhausted]


def _free_pair_bits(facets: FrozenSet[int]) -> List[Tuple[int, int]]:
    """
    Free pairs as bit sets. ``sigma`` is a facet and ``tau = sigma - {v}`` lies
    in no other facet; the empty face is never collapsed.
    """
    pairs = []
    for sigma in facets:
        if popcount(sigma) < 2:
            continue
        for position in iter_positions(sigma):
            tau = sigma & ~(1 << position)
            if not any(
                other != sigma and tau & ~other == 0 for other in facets
            ):
                pairs.append((sigma, tau))
    return pairs


def _collapse_facets(facets: FrozenSet[int], sigma: int, tau: int) -> FrozenSet[int]:
    remaining = [facet for facet in facets if facet != sigma]
    for position in iter_positions(sigma):
        face = sigma & ~(1 << position)
        if face != tau:
            remaining.append(face)
    return maximal_elements(remaining)


def _dim(facets: FrozenSet[int]) -> int:
    return max(popcount(facet) for facet in facets) - 1


def free_pairs(complex_: SimplicialComplex) -> List[CollapseStep]:
    """
    Every elementary collapsing pair, sorted by ``(sigma, tau)``.

    Examples
    --------
    >>> from rzk_index.simplicial_core import boundary_simplex
    >>> edge = SimplicialComplex.from_facets(2, [[1, 2]])
    >>> [(str(p.sigma), str(p.tau)) for p in free_pairs(edge)]
    [('{1,2}', '{1}'), ('{1,2}', '{2}')]
    >>> free_pairs(boundary_simplex(3))
    []
    """
    steps = [
        CollapseStep(VertexSet(sigma), VertexSet(tau))
        for sigma, tau in _free_pair_bits(complex_.facet_bits)
    ]
    return sorted(steps, key=lambda step: (step.sigma.sort_key(), step.tau.sort_key()))


def is_free_pair(complex_: SimplicialComplex, step: CollapseStep) -> bool:
    sigma, tau = step.sigma.bits, step.tau.bits
    if sigma not in complex_.facet_bits:
        return False
    return not any(
        other != sigma and tau & ~other == 0 for other in complex_.facet_bits
    )


def apply_collapse(
    complex_: SimplicialComplex, step: CollapseStep
) -> SimplicialComplex:
    """
    Remove ``sigma`` and ``tau``. The result may have ghost vertices.
    """
    if not is_free_pair(complex_, step):
        raise NotAFreePair(
            "(%s, %s) is not an elementary collapsing pair" % (step.sigma, step.tau)
        )
    facets = _collapse_facets(complex_.facet_bits, step.sigma.bits, step.tau.bits)
    return SimplicialComplex(
        complex_.m, (VertexSet(bits) for bits in facets), allow_ghosts=True
    )


def replay(
    complex_: SimplicialComplex, steps: Iterable[CollapseStep]
) -> SimplicialComplex:
    """
    Re-apply ``steps`` one by one, checking each is a free pair at its turn
    """
    current = SimplicialComplex(complex_.m, complex_.facets, allow_ghosts=True)
    for step in steps:
        current = apply_collapse(current, step)
    return current


def retract_dimension(final_dim: int, steps: Sequence[CollapseStep]) -> int:
    dims = [final_dim + 1] + [step.sigma.dim for step in steps]
    return max(dims)


def _greedy_run(
    facets: FrozenSet[int],
    target_dim: int,
    budget: int,
    order: Optional[Sequence[int]],
) -> Tuple[List[Tuple[int, int]], FrozenSet[int]]:
    """
    Collapse the free pair with the largest ``sigma`` until the dimension
    drops below ``target_dim + 1`` or ``budget`` steps are spent. Ties go to
    the lexicographically smallest ``(sigma, tau)`` under the vertex ``order``.
    """

    def relabel(bits: int) -> Tuple[int, ...]:
        labels = [order[p] if order is not None else p for p in iter_positions(bits)]
        return tuple(sorted(labels))

    steps: List[Tuple[int, int]] = []
    while len(steps) < budget and _dim(facets) > target_dim:
        pairs = _free_pair_bits(facets)
        if not pairs:
            break
        sigma, tau = min(
            pairs,
            key=lambda pair: (-popcount(pair[0]), relabel(pair[0]), relabel(pair[1])),
        )
        facets = _collapse_facets(facets, sigma, tau)
        steps.append((sigma, tau))
    return steps, facets


def search_dim_reduction(
    complex_: SimplicialComplex,
    budget: Optional[int] = None,
    restarts: int = DEFAULT_RESTARTS,
    seed: int = 0,
) -> SearchResult:
    """
    Greedy search for a collapse of ``K`` onto a complex of smaller dimension.

    The first attempt breaks ties by vertex labels, the ``restarts`` further
    attempts by vertex permutations drawn from ``random.Random(seed)``.
    ``budget`` caps the steps of each attempt and defaults to twice the
    number of faces. Returns a certificate that has been replayed, or
    :class:`Exhausted`.

    Examples
    --------
    >>> glued = SimplicialComplex.from_facets(4, [[1, 2, 3], [2, 3, 4]])
    >>> certificate = search_dim_reduction(glued)
    >>> [(str(s.sigma), str(s.tau)) for s in certificate.steps]
    [('{1,2,3}', '{1,2}'), ('{2,3,4}', '{2,3}')]
    >>> certificate.final_dim
    1
    """
    initial_dim = complex_.dim
    if initial_dim < 1:
        raise ValueError("Collapse search needs dim K >= 1, got %d" % initial_dim)
    if budget is None:
        budget = 2 * len(complex_.faces)
    rng = random.Random(seed)
    target = initial_dim - 1
    facets = complex_.facet_bits
    best_dim = initial_dim
    attempts = []
    for attempt in range(restarts + 1):
        order: Optional[List[int]] = None
        if attempt:
            order = list(range(complex_.m))
            rng.shuffle(order)
        steps, final = _greedy_run(facets, target, budget, order)
        final_dim = _dim(final)
        attempts.append(len(steps))
        best_dim = min(best_dim, final_dim)
        logger.debug(
            f"Collapse attempt {attempt}: {len(steps)} steps, reached dimension {final_dim}"
        )
        if final_dim < initial_dim:
            collapse_steps = tuple(
                CollapseStep(VertexSet(sigma), VertexSet(tau)) for sigma, tau in steps
            )
            replayed = replay(complex_, collapse_steps)
            assert replayed.dim == final_dim
            return CollapseCertificate(
                steps=collapse_steps,
                initial_dim=initial_dim,
                final_dim=final_dim,
                retract_dim=retract_dimension(final_dim, collapse_steps),
            )
        if not steps:
            # no free pair at all, every restart would fail the same way
            break
    logger.info(f"Collapse search exhausted after {len(attempts)} attempts")
    return Exhausted(
        restarts=len(attempts) - 1,
        steps_tried=sum(attempts),
        best_dim=best_dim,
        attempts=tuple(attempts),
    )
