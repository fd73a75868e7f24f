# -*- coding: utf-8 -*-
from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

from .exceptions import VertexOutOfRange

# A vertex set has to fit into one machine word
MAX_VERTICES = 63


def popcount(bits: int) -> int:
    return bin(bits).count("1")


def iter_positions(bits: int) -> Iterator[int]:
    """
    Zero-based positions of the set bits, in increasing order
    """
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def compress(bits: int, mask: int) -> int:
    """
    Keep the bits of ``bits`` that lie in ``mask`` and pack them to the right,
    preserving their order.

    Examples
    --------
    >>> bin(compress(0b10100, 0b10110))
    '0b110'
    """
    result = 0
    out = 0
    for position in iter_positions(mask):
        if bits >> position & 1:
            result |= 1 << out
        out += 1
    return result


def expand(bits: int, mask: int) -> int:
    """
    Inverse of :func:`compress`: spread the low bits of ``bits`` over the
    positions of ``mask``.

    Examples
    --------
    >>> bin(expand(0b101, 0b10110))
    '0b10010'
    """
    result = 0
    for index, position in enumerate(iter_positions(mask)):
        if bits >> index & 1:
            result |= 1 << position
    return result


@dataclass(frozen=True)
class VertexSet:
    """
    Subset of ``[m] = {1, ..., m}`` as a bit vector, vertex ``i`` at bit ``i - 1``.

    Used for faces, non-faces and supports alike.

    Examples
    --------
    >>> face = VertexSet.of(1, 3)
    >>> face.vertices, len(face), face.dim
    ((1, 3), 2, 1)
    >>> VertexSet.empty().dim
    -1
    """

    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> MAX_VERTICES:
            raise ValueError(
                "Vertex sets hold vertices 1..%d only, got bits %r"
                % (MAX_VERTICES, self.bits)
            )

    @classmethod
    def of(cls, *vertices: int) -> "VertexSet":
        return cls.from_vertices(vertices)

    @classmethod
    def from_vertices(cls, vertices: Iterable[int]) -> "VertexSet":
        bits = 0
        for vertex in vertices:
            if not 1 <= vertex <= MAX_VERTICES:
                raise VertexOutOfRange(vertex, MAX_VERTICES)
            bits |= 1 << (vertex - 1)
        return cls(bits)

    @classmethod
    def empty(cls) -> "VertexSet":
        return cls(0)

    @classmethod
    def full(cls, m: int) -> "VertexSet":
        """All of ``[m]``"""
        return cls((1 << m) - 1)

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(position + 1 for position in iter_positions(self.bits))

    @property
    def dim(self) -> int:
        return len(self) - 1

    @property
    def max_vertex(self) -> int:
        return self.bits.bit_length()

    def is_subset(self, other: "VertexSet") -> bool:
        return self.bits & ~other.bits == 0

    def is_proper_subset(self, other: "VertexSet") -> bool:
        return self.bits != other.bits and self.is_subset(other)

    def within(self, m: int) -> bool:
        return self.bits >> m == 0

    def add(self, vertex: int) -> "VertexSet":
        return VertexSet(self.bits | 1 << (vertex - 1))

    def remove(self, vertex: int) -> "VertexSet":
        return VertexSet(self.bits & ~(1 << (vertex - 1)))

    def complement(self, m: int) -> "VertexSet":
        return VertexSet(~self.bits & ((1 << m) - 1))

    def compress(self, onto: "VertexSet") -> "VertexSet":
        """Relabel into ``onto``'s order-preserving numbering ``1..|onto|``"""
        return VertexSet(compress(self.bits, onto.bits))

    def expand(self, onto: "VertexSet") -> "VertexSet":
        """Inverse of :meth:`compress`"""
        return VertexSet(expand(self.bits, onto.bits))

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Order by cardinality, then lexicographically by sorted vertices"""
        return len(self), self.vertices

    def __len__(self) -> int:
        return popcount(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __contains__(self, vertex: object) -> bool:
        if not isinstance(vertex, int) or vertex < 1:
            return False
        return bool(self.bits >> (vertex - 1) & 1)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & ~other.bits)

    def __repr__(self) -> str:
        return "VertexSet({%s})" % ", ".join(str(v) for v in self.vertices)

    def __str__(self) -> str:
        return "{%s}" % ",".join(str(v) for v in self.vertices)
