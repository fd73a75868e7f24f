# -*- coding: utf-8 -*-
import logging

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .exceptions import RankTooLarge, VertexNotInSupport, WidthMismatch
from .simplicial_core import SimplicialComplex
from .vertex_set import MAX_VERTICES, VertexSet, compress

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_CAP = 20


@dataclass(frozen=True)
class GroupElement:
    """
    Element of ``(Z/2)^m`` written multiplicatively: bit ``i - 1`` is set iff
    ``g_i = -1``.

    Examples
    --------
    >>> g = GroupElement.from_string("1100")
    >>> h = GroupElement.from_string("0110")
    >>> (g * h).to_string()
    '1010'
    >>> g.support
    VertexSet({1, 2})
    """

    bits: int
    m: int

    def __post_init__(self):
        if not 1 <= self.m <= MAX_VERTICES:
            raise ValueError(
                "Width must be in [1, %d], got %d" % (MAX_VERTICES, self.m)
            )
        if self.bits < 0 or self.bits >> self.m:
            raise ValueError("Bits %r do not fit width %d" % (self.bits, self.m))

    @classmethod
    def identity(cls, m: int) -> "GroupElement":
        return cls(0, m)

    @classmethod
    def from_string(cls, text: str) -> "GroupElement":
        """
        Leftmost character is vertex 1, ``'1'`` meaning the coordinate acts by -1
        """
        if not text or any(char not in "01" for char in text):
            raise ValueError("Expected a non-empty string of 0/1, got %r" % text)
        bits = 0
        for position, char in enumerate(text):
            if char == "1":
                bits |= 1 << position
        return cls(bits, len(text))

    def to_string(self) -> str:
        return "".join(
            "1" if self.bits >> position & 1 else "0" for position in range(self.m)
        )

    @property
    def support(self) -> VertexSet:
        return VertexSet(self.bits)

    @property
    def is_identity(self) -> bool:
        return self.bits == 0

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return product(self, other)

    def __repr__(self) -> str:
        return "GroupElement(%s)" % self.to_string()

    def __str__(self) -> str:
        return self.to_string()


def product(g: GroupElement, h: GroupElement) -> GroupElement:
    if g.m != h.m:
        raise WidthMismatch(g.m, h.m)
    return GroupElement(g.bits ^ h.bits, g.m)


def _reduced_echelon(rows: Iterable[int]) -> Tuple[int, ...]:
    """
    Canonical reduced row-echelon basis of the GF(2) span of ``rows``.

    The pivot of a row is its lowest vertex; every pivot column is clear in
    all other rows, and rows are sorted by pivot.
    """
    basis: Dict[int, int] = {}
    for row in rows:
        for pivot, pivot_row in basis.items():
            if row & pivot:
                row ^= pivot_row
        if not row:
            continue
        pivot = row & -row
        for other_pivot, other_row in list(basis.items()):
            if other_row & pivot:
                basis[other_pivot] = other_row ^ row
        basis[pivot] = row
    return tuple(basis[pivot] for pivot in sorted(basis))


class Subtorus:
    """
    Subgroup ``G < (Z/2)^m`` as a GF(2) row space.

    The basis is kept in canonical reduced echelon form, so equal subgroups
    have equal bases whatever generators they came from.

    Examples
    --------
    >>> G = Subtorus.from_strings(["1100", "0110", "1010"])
    >>> G.rank, [g.to_string() for g in G.basis]
    (2, ['1010', '0110'])
    """

    def __init__(self, m: int, generators: Iterable[GroupElement] = ()):
        if not 1 <= m <= MAX_VERTICES:
            raise ValueError("Width must be in [1, %d], got %d" % (MAX_VERTICES, m))
        rows = []
        for generator in generators:
            if generator.m != m:
                raise WidthMismatch(m, generator.m)
            rows.append(generator.bits)
        self.m = m
        self._basis_bits = _reduced_echelon(rows)

    @classmethod
    def from_generators(
        cls, m: int, generators: Iterable[GroupElement]
    ) -> "Subtorus":
        return cls(m, generators)

    @classmethod
    def from_strings(
        cls, generators: Sequence[str], m: Optional[int] = None
    ) -> "Subtorus":
        elements = [GroupElement.from_string(text) for text in generators]
        if m is None:
            if not elements:
                raise ValueError("Width is required for an empty generator list")
            m = elements[0].m
        return subtorus_from_generators(m, elements)

    @property
    def basis(self) -> Tuple[GroupElement, ...]:
        return tuple(GroupElement(bits, self.m) for bits in self._basis_bits)

    @property
    def rank(self) -> int:
        return len(self._basis_bits)

    @property
    def order(self) -> int:
        return 1 << self.rank

    def elements(
        self,
        include_identity: bool = False,
        cap: int = DEFAULT_ENUMERATION_CAP,
    ) -> Iterator[GroupElement]:
        """
        All ``2^rank`` elements in Gray-code order over the basis, each once.

        Consecutive elements differ by one basis row, so every step is a
        single XOR.
        """
        if self.rank > cap:
            raise RankTooLarge(self.rank, cap)
        basis = self._basis_bits
        current = 0
        if include_identity:
            yield GroupElement(0, self.m)
        for index in range(1, 1 << len(basis)):
            flip = (index & -index).bit_length() - 1
            current ^= basis[flip]
            yield GroupElement(current, self.m)

    def nontrivial_elements(
        self, cap: int = DEFAULT_ENUMERATION_CAP
    ) -> List[GroupElement]:
        return list(self.elements(include_identity=False, cap=cap))

    @property
    def support(self) -> VertexSet:
        """
        Union of the supports of all elements, i.e. the OR of the basis rows
        """
        bits = 0
        for row in self._basis_bits:
            bits |= row
        return VertexSet(bits)

    def contains(self, element: GroupElement) -> bool:
        if element.m != self.m:
            raise WidthMismatch(self.m, element.m)
        row = element.bits
        for pivot_row in self._basis_bits:
            if row & pivot_row & -pivot_row:
                row ^= pivot_row
        return row == 0

    def restrict(self, index_set: VertexSet) -> "Subtorus":
        """
        Project onto the coordinates in ``index_set``, relabeled onto
        ``1..|index_set|``. Rank is preserved when ``index_set`` covers the
        support.
        """
        width = len(index_set)
        return Subtorus(
            width,
            (
                GroupElement(compress(bits, index_set.bits), width)
                for bits in self._basis_bits
            ),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subtorus):
            return NotImplemented
        return self.m == other.m and self._basis_bits == other._basis_bits

    def __hash__(self) -> int:
        return hash((self.m, self._basis_bits))

    def __repr__(self) -> str:
        return "Subtorus(m=%d, basis=[%s])" % (
            self.m,
            ", ".join(g.to_string() for g in self.basis),
        )


def subtorus_from_generators(m: int, generators: Iterable[GroupElement]) -> Subtorus:
    """
    Span of ``generators`` with its canonical basis; reordering the generators
    or replacing one by its product with another gives the same subtorus.

    >>> subtorus_from_generators(3, [GroupElement.from_string("011")]).basis
    (GroupElement(011),)
    """
    return Subtorus(m, generators)


def diagonal(m: int) -> Subtorus:
    """The diagonal Z/2, acting by -1 on every coordinate"""
    return Subtorus(m, [GroupElement((1 << m) - 1, m)])


def is_subgroup(smaller: Subtorus, larger: Subtorus) -> bool:
    if smaller.m != larger.m:
        raise WidthMismatch(larger.m, smaller.m)
    return all(larger.contains(g) for g in smaller.basis)


@dataclass(frozen=True)
class Freeness:
    """
    Outcome of the freeness test; ``witness`` is an element fixing a point
    when the action is not free.
    """

    free: bool
    witness: Optional[GroupElement] = None

    def __bool__(self) -> bool:
        return self.free


def acts_freely(
    group: Subtorus,
    complex_: SimplicialComplex,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Freeness:
    """
    ``g`` fixes a point of the real moment-angle complex iff some point has
    coordinate 0 on all of ``supp(g)``, i.e. iff ``supp(g)`` is a face.

    Examples
    --------
    >>> from rzk_index.simplicial_core import boundary_simplex, full_simplex
    >>> bool(acts_freely(diagonal(3), boundary_simplex(3)))
    True
    >>> acts_freely(diagonal(3), full_simplex(3))
    Freeness(free=False, witness=GroupElement(111))
    """
    if group.m != complex_.m:
        raise WidthMismatch(complex_.m, group.m)
    for element in group.elements(cap=cap):
        if complex_.is_face(element.support):
            logger.debug(f"{element} fixes a point, its support is a face")
            return Freeness(False, element)
    return Freeness(True)


def find_covering_element(
    group: Subtorus, i: int, j: int
) -> Optional[GroupElement]:
    """
    Non-trivial element whose support contains both ``i`` and ``j``.

    Take ``g_i``, ``g_j`` with ``i ∈ supp(g_i)``, ``j ∈ supp(g_j)``; one of
    them already covers both, or else their product does, since ``i`` and ``j``
    then both lie in the symmetric difference of the supports.
    """
    support = group.support
    for vertex in (i, j):
        if vertex not in support:
            raise VertexNotInSupport(vertex)
    basis = group.basis
    g_i = next(g for g in basis if i in g.support)
    g_j = next(g for g in basis if j in g.support)
    for candidate in (g_i, g_j, g_i * g_j):
        if i in candidate.support and j in candidate.support:
            return candidate
    return None


def iter_subtori(m: int) -> Iterator[Subtorus]:
    """
    Every subgroup of ``(Z/2)^m`` exactly once, by increasing rank
    """
    seen = {Subtorus(m)}
    frontier = [Subtorus(m)]
    yield frontier[0]
    vectors = [GroupElement(bits, m) for bits in range(1, 1 << m)]
    while frontier:
        next_frontier = []
        for group in frontier:
            for vector in vectors:
                if group.contains(vector):
                    continue
                extended = Subtorus(m, group.basis + (vector,))
                if extended not in seen:
                    seen.add(extended)
                    next_frontier.append(extended)
        next_frontier.sort(key=lambda g: g._basis_bits)
        for group in next_frontier:
            yield group
        frontier = next_frontier
