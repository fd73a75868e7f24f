# -*- coding: utf-8 -*-
import logging

from typing import Iterator, List, Set, Tuple

from .exceptions import EnumerationLimit
from .simplicial_core import SimplicialComplex
from .two_torus import Subtorus, iter_subtori
from .vertex_set import iter_positions, popcount

logger = logging.getLogger(__name__)

MAX_EXHAUSTIVE_VERTICES = 5


def _check_limit(m: int):
    if not 1 <= m <= MAX_EXHAUSTIVE_VERTICES:
        raise EnumerationLimit(
            "Exhaustive enumeration supports 1 to %d vertices, got %d"
            % (MAX_EXHAUSTIVE_VERTICES, m)
        )


def iter_complexes(m: int) -> Iterator[SimplicialComplex]:
    """
    Every simplicial complex on ``[m]`` without ghost vertices, each once.

    Subsets with at least two vertices are decided in order of size, and a
    subset may only join when all its codimension-one subsets already did,
    which keeps every family downward closed.

    Examples
    --------
    >>> [sum(1 for _ in iter_complexes(m)) for m in (1, 2, 3)]
    [1, 2, 9]
    """
    _check_limit(m)
    candidates = sorted(
        (bits for bits in range(1 << m) if popcount(bits) >= 2),
        key=lambda bits: (popcount(bits), bits),
    )
    faces: Set[int] = {0}
    faces.update(1 << position for position in range(m))

    def extend(index: int) -> Iterator[SimplicialComplex]:
        if index == len(candidates):
            yield SimplicialComplex.from_faces(m, frozenset(faces))
            return
        yield from extend(index + 1)
        candidate = candidates[index]
        if all(
            (candidate & ~(1 << position)) in faces
            for position in iter_positions(candidate)
        ):
            faces.add(candidate)
            yield from extend(index + 1)
            faces.remove(candidate)

    yield from extend(0)


def all_complexes(max_m: int) -> List[SimplicialComplex]:
    _check_limit(max_m)
    complexes = [
        complex_ for m in range(1, max_m + 1) for complex_ in iter_complexes(m)
    ]
    logger.info(f"Enumerated {len(complexes)} complexes on at most {max_m} vertices")
    return complexes


def nontrivial_subtori(m: int) -> List[Subtorus]:
    return [group for group in iter_subtori(m) if group.rank > 0]


def iter_instances(max_m: int) -> Iterator[Tuple[SimplicialComplex, Subtorus]]:
    """
    Every pair of a complex on at most ``max_m`` vertices and a non-trivial
    subgroup of the matching width
    """
    _check_limit(max_m)
    for m in range(1, max_m + 1):
        groups = nontrivial_subtori(m)
        for complex_ in iter_complexes(m):
            for group in groups:
                yield complex_, group
