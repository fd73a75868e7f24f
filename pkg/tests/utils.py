import logging

from itertools import combinations
from typing import Iterable, List, Set

from rzk_index.extended_nat import ExtendedNat, Finite, INFINITY

logger = logging.getLogger(__name__)


def bits_of(vertices: Iterable[int]) -> int:
    bits = 0
    for vertex in vertices:
        bits |= 1 << (vertex - 1)
    return bits


def brute_faces(m: int, facets: Iterable[Iterable[int]]) -> Set[int]:
    """
    Downward closure of the facets, subset by subset
    """
    faces = {0}
    for facet in facets:
        facet = list(facet)
        for size in range(1, len(facet) + 1):
            for subset in combinations(facet, size):
                faces.add(bits_of(subset))
    return faces


def brute_minimal_non_faces(m: int, faces: Set[int]) -> Set[int]:
    minimal = set()
    for bits in range(1 << m):
        if bits in faces:
            continue
        if all(bits & ~(1 << p) in faces for p in range(m) if bits >> p & 1):
            minimal.add(bits)
    return minimal


def brute_delta(m: int, faces: Set[int]) -> ExtendedNat:
    sizes = [bin(bits).count("1") for bits in range(1 << m) if bits not in faces]
    return Finite(min(sizes) - 1) if sizes else INFINITY


def brute_flag(m: int, faces: Set[int]) -> ExtendedNat:
    sizes = [bin(bits).count("1") for bits in brute_minimal_non_faces(m, faces)]
    return Finite(max(sizes) - 1) if sizes else INFINITY


def reference_rank(rows: List[int]) -> int:
    """
    GF(2) rank of rows given as Python integers
    """
    pivots: List[int] = []
    for row in rows:
        for pivot in pivots:
            row = min(row, row ^ pivot)
        if row:
            pivots.append(row)
            pivots.sort(reverse=True)
    return len(pivots)
