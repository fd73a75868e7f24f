from typing import Optional


def _at(message: str, location: Optional[str]) -> str:
    return "%s (at %s)" % (message, location) if location else message


class RzkError(Exception):
    pass


class InputError(RzkError, ValueError):
    pass


class ResourceCapError(RzkError):
    pass


class ConfigException(InputError):
    pass


class MalformedInput(InputError):
    def __init__(self, message: str, location: Optional[str] = None):
        self.location = location
        super().__init__(_at(message, location))


class GhostVertex(InputError):
    def __init__(self, vertex: int, location: Optional[str] = None):
        self.vertex = vertex
        self.location = location
        super().__init__(
            _at("Vertex %d does not appear in any facet" % vertex, location)
        )


class VertexOutOfRange(InputError):
    def __init__(self, vertex: int, m: int, location: Optional[str] = None):
        self.vertex = vertex
        self.m = m
        self.location = location
        super().__init__(_at("Vertex %d is outside of [1, %d]" % (vertex, m), location))


class WidthMismatch(InputError):
    def __init__(self, expected: int, found: int, location: Optional[str] = None):
        self.expected = expected
        self.found = found
        self.location = location
        super().__init__(
            _at("Expected width %d, found width %d" % (expected, found), location)
        )


class EmptyIndexSet(InputError):
    pass


class VertexNotInSupport(InputError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__("Vertex %d is not in the support of the group" % vertex)


class TrivialGroup(InputError):
    pass


class NotAFreePair(InputError):
    pass


class RankTooLarge(ResourceCapError):
    def __init__(self, rank: int, cap: int):
        self.rank = rank
        self.cap = cap
        super().__init__(
            "Rank %d exceeds the element enumeration cap %d" % (rank, cap)
        )


class TooManyCells(ResourceCapError):
    def __init__(self, cells: int, cap: int, at_least: bool = False):
        self.cells = cells
        self.cap = cap
        super().__init__(
            "Complex has %s%d cells, the cap is %d"
            % ("at least " if at_least else "", cells, cap)
        )


class EnumerationLimit(ResourceCapError):
    pass
