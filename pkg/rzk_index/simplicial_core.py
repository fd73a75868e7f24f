# -*- coding: utf-8 -*-
import logging
import threading

from math import comb

from typing import (
    FrozenSet,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Set,
    Tuple,
    Union,
)

from cachetools import LRUCache, cached

from .exceptions import EmptyIndexSet, GhostVertex, VertexOutOfRange
from .extended_nat import ExtendedNat, Finite, INFINITY
from .vertex_set import MAX_VERTICES, VertexSet, compress, iter_positions, popcount

logger = logging.getLogger(__name__)

FacetLike = Union[VertexSet, Iterable[int]]


def _as_vertex_set(facet: FacetLike) -> VertexSet:
    if isinstance(facet, VertexSet):
        return facet
    return VertexSet.from_vertices(facet)


def maximal_elements(family: Iterable[int]) -> FrozenSet[int]:
    """
    Inclusion-maximal members of a family of bit sets
    """
    members = sorted(set(family), key=popcount, reverse=True)
    maximal: List[int] = []
    for bits in members:
        if not any(bits & ~kept == 0 for kept in maximal):
            maximal.append(bits)
    return frozenset(maximal)


def _submasks(bits: int) -> Iterable[int]:
    sub = bits
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & bits


class SimplicialComplex:
    """
    Simplicial complex on ``[m]`` kept as its antichain of facets.

    Faces are the subsets of facets, so downward closure holds by construction.
    The full face set is only materialized on demand (:attr:`faces`).

    Examples
    --------
    >>> K = SimplicialComplex.from_facets(3, [[1, 2], [2, 3], [1, 3]])
    >>> K.is_face(VertexSet.of(1, 2)), K.is_face(VertexSet.of(1, 2, 3))
    (True, False)
    >>> K.delta_number(), K.flag_number()
    (Finite(2), Finite(2))
    """

    def __init__(
        self, m: int, facets: Iterable[FacetLike], allow_ghosts: bool = False
    ):
        if not 1 <= m <= MAX_VERTICES:
            raise ValueError(
                "Vertex count must be in [1, %d], got %d" % (MAX_VERTICES, m)
            )
        facet_sets = [_as_vertex_set(facet) for facet in facets]
        for facet in facet_sets:
            if not facet.within(m):
                raise VertexOutOfRange(facet.max_vertex, m)
        self.m = m
        self.allow_ghosts = allow_ghosts
        self._facet_bits = maximal_elements(facet.bits for facet in facet_sets)
        if not self._facet_bits:
            # the empty set is always a face
            self._facet_bits = frozenset([0])
        if not allow_ghosts:
            covered = 0
            for bits in self._facet_bits:
                covered |= bits
            missing = ~covered & ((1 << m) - 1)
            if missing:
                raise GhostVertex(next(iter_positions(missing)) + 1)
        self._faces: Optional[FrozenSet[int]] = None
        self._faces_lock = threading.Lock()

    @classmethod
    def from_facets(
        cls, m: int, facets: Iterable[FacetLike], allow_ghosts: bool = False
    ) -> "SimplicialComplex":
        return cls(m, facets, allow_ghosts=allow_ghosts)

    @classmethod
    def from_faces(
        cls, m: int, faces: Iterable[int], allow_ghosts: bool = False
    ) -> "SimplicialComplex":
        """
        Build from a downward-closed family of bit sets; only its maximal
        members are kept.
        """
        face_set = frozenset(faces) | {0}
        complex_ = cls(m, (VertexSet(bits) for bits in face_set), allow_ghosts)
        complex_._faces = face_set
        return complex_

    @property
    def facets(self) -> FrozenSet[VertexSet]:
        return frozenset(VertexSet(bits) for bits in self._facet_bits)

    @property
    def facet_bits(self) -> FrozenSet[int]:
        return self._facet_bits

    def sorted_facets(self) -> List[VertexSet]:
        return sorted(self.facets, key=VertexSet.sort_key)

    @property
    def faces(self) -> FrozenSet[int]:
        """
        Every face as a bit set, the empty face included. Filled lazily, once.
        """
        cached_faces = self._faces
        if cached_faces is None:
            with self._faces_lock:
                cached_faces = self._faces
                if cached_faces is None:
                    faces: Set[int] = set()
                    for facet in self._facet_bits:
                        faces.update(_submasks(facet))
                    cached_faces = self._faces = frozenset(faces)
                    logger.debug(
                        f"Materialized {len(faces)} faces of complex on {self.m} vertices"
                    )
        return cached_faces

    @property
    def dim(self) -> int:
        return max(popcount(bits) for bits in self._facet_bits) - 1

    @property
    def vertices(self) -> VertexSet:
        covered = 0
        for bits in self._facet_bits:
            covered |= bits
        return VertexSet(covered)

    def f_vector(self) -> Tuple[int, ...]:
        """
        Face counts by dimension, starting with the empty face (dimension -1)

        >>> full_simplex(40).f_vector()[:3]
        (1, 40, 780)
        """
        if self.is_full_simplex():
            return tuple(comb(self.m, size) for size in range(self.m + 1))
        counts = [0] * (self.dim + 2)
        for bits in self.faces:
            counts[popcount(bits)] += 1
        return tuple(counts)

    def is_full_simplex(self) -> bool:
        return self._facet_bits == frozenset([(1 << self.m) - 1])

    def is_face(self, face: VertexSet) -> bool:
        bits = face.bits
        return any(bits & ~facet == 0 for facet in self._facet_bits)

    def _is_face_bits(self, bits: int) -> bool:
        if self._faces is not None:
            return bits in self._faces
        return any(bits & ~facet == 0 for facet in self._facet_bits)

    def _non_face_layers(self, stop_at_first: bool) -> Iterable[Tuple[int, List[int]]]:
        """
        Walk subsets of ``[m]`` by cardinality, keeping only candidates all of
        whose codimension-one subsets are faces. Every candidate which is not
        a face is then a minimal non-face, and supersets of minimal non-faces are
        never generated.

        Yields ``(cardinality, minimal non-faces of that cardinality)`` for the
        layers containing at least one.
        """
        if self.is_full_simplex():
            return
        layer = [0]
        for size in range(1, self.m + 1):
            layer_set = set(layer)
            next_layer: List[int] = []
            minimal: List[int] = []
            for face in layer:
                start = face.bit_length()
                for position in range(start, self.m):
                    candidate = face | 1 << position
                    if any(
                        (candidate & ~(1 << p)) not in layer_set
                        for p in iter_positions(face)
                    ):
                        continue
                    if self._is_face_bits(candidate):
                        next_layer.append(candidate)
                    else:
                        minimal.append(candidate)
            logger.debug(
                f"Layer {size}: {len(next_layer)} faces, {len(minimal)} minimal non-faces"
            )
            if minimal:
                yield size, minimal
                if stop_at_first:
                    return
            if not next_layer:
                return
            layer = next_layer

    def minimal_non_faces(self) -> FrozenSet[VertexSet]:
        """
        Inclusion-minimal non-faces; empty exactly for the full simplex.
        """
        return frozenset(
            VertexSet(bits)
            for _, minimal in self._non_face_layers(stop_at_first=False)
            for bits in minimal
        )

    def minimal_non_face_orders(self) -> FrozenSet[int]:
        return frozenset(len(face) for face in self.minimal_non_faces())

    def delta_number(self) -> ExtendedNat:
        """
        Minimum dimension of a non-face, infinite for the full simplex.

        Only the smallest layer of minimal non-faces is enumerated.
        """
        for size, _ in self._non_face_layers(stop_at_first=True):
            return Finite(size - 1)
        return INFINITY

    def flag_number(self) -> ExtendedNat:
        """
        Maximum dimension of a minimal non-face, infinite for the full simplex.
        """
        orders = self.minimal_non_face_orders()
        if not orders:
            return INFINITY
        return Finite(max(orders) - 1)

    def is_flag(self) -> bool:
        return self.flag_number() in (Finite(1), INFINITY)

    def is_q_neighborly(self, q: int) -> bool:
        """
        Every set of at most ``q + 1`` vertices is a face.
        """
        if q < 0:
            raise ValueError("q must be non-negative, got %d" % q)
        return self.delta_number() >= Finite(q + 1)

    def full_subcomplex(self, index_set: VertexSet) -> "FullSubcomplex":
        """
        Faces of ``K`` inside ``index_set``, relabeled onto ``1..|index_set|``.

        Returns the complex together with the relabeling, new vertex ``k``
        being ``vertices[k - 1]`` of ``K``.
        """
        if not index_set:
            raise EmptyIndexSet("Full subcomplex needs a non-empty index set")
        if not index_set.within(self.m):
            raise VertexOutOfRange(index_set.max_vertex, self.m)
        mask = index_set.bits
        facets = maximal_elements(facet & mask for facet in self._facet_bits)
        relabeled = [VertexSet(compress(bits, mask)) for bits in facets]
        sub = SimplicialComplex(
            len(index_set), relabeled, allow_ghosts=self.allow_ghosts
        )
        return FullSubcomplex(sub, index_set.vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.m == other.m and self._facet_bits == other._facet_bits

    def __hash__(self) -> int:
        return hash((self.m, self._facet_bits))

    def __repr__(self) -> str:
        return "SimplicialComplex(m=%d, facets=[%s])" % (
            self.m,
            ", ".join(str(facet) for facet in self.sorted_facets()),
        )


class FullSubcomplex(NamedTuple):
    complex: SimplicialComplex
    vertices: Tuple[int, ...]

    def relabel(self, face: VertexSet) -> VertexSet:
        """Map a face of the subcomplex back to ``K``'s labels"""
        return VertexSet.from_vertices(self.vertices[v - 1] for v in face)


_numbers_lock = threading.Lock()
_delta_cache: LRUCache = LRUCache(maxsize=16384)
_flag_cache: LRUCache = LRUCache(maxsize=16384)


@cached(cache=_delta_cache, lock=_numbers_lock)
def restricted_delta(complex_: SimplicialComplex, index_set: VertexSet) -> ExtendedNat:
    """
    δ-number of the full subcomplex over ``index_set``, memoized
    """
    return complex_.full_subcomplex(index_set).complex.delta_number()


@cached(cache=_flag_cache, lock=_numbers_lock)
def restricted_flag(complex_: SimplicialComplex, index_set: VertexSet) -> ExtendedNat:
    return complex_.full_subcomplex(index_set).complex.flag_number()


def clear_number_caches():
    with _numbers_lock:
        _delta_cache.clear()
        _flag_cache.clear()


def full_simplex(m: int) -> SimplicialComplex:
    return SimplicialComplex(m, [VertexSet.full(m)])


def boundary_simplex(m: int) -> SimplicialComplex:
    """
    Boundary of the (m-1)-simplex: all (m-1)-subsets of ``[m]``.

    For ``m = 1`` this is the complex whose only face is empty, which has a
    ghost vertex and is rejected.
    """
    if m < 1:
        raise ValueError("m must be positive, got %d" % m)
    full = VertexSet.full(m)
    return SimplicialComplex(m, [full.remove(vertex) for vertex in range(1, m + 1)])


def cone(complex_: SimplicialComplex) -> SimplicialComplex:
    """
    Cone with apex ``m + 1``
    """
    apex = complex_.m + 1
    return SimplicialComplex(
        apex,
        [facet.add(apex) for facet in complex_.facets],
        allow_ghosts=complex_.allow_ghosts,
    )
