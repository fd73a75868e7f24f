import functools

from typing import Optional, Union


@functools.total_ordering
class ExtendedNat:
    """
    A natural number or infinity, totally ordered with infinity on top.

    δ-numbers and flag numbers of full simplices are infinite.

    Examples
    --------
    >>> Finite(2) < INFINITY
    True
    >>> min(Finite(3), Finite(1), INFINITY)
    Finite(1)
    >>> str(INFINITY), INFINITY.to_json()
    ('inf', 'inf')
    """

    __slots__ = ("_value",)
    _value: Optional[int]

    def __init__(self, value: Optional[int] = None):
        if value is not None and value < 0:
            raise ValueError("ExtendedNat must be non-negative, got %d" % value)
        object.__setattr__(self, "_value", value)

    def __setattr__(self, key, value):
        raise AttributeError("ExtendedNat is immutable")

    @classmethod
    def finite(cls, value: int) -> "ExtendedNat":
        return cls(value)

    @classmethod
    def infinity(cls) -> "ExtendedNat":
        return cls(None)

    @classmethod
    def from_json(cls, value: Union[int, str]) -> "ExtendedNat":
        if value == "inf":
            return cls.infinity()
        if isinstance(value, int) and not isinstance(value, bool):
            return cls(value)
        raise ValueError("Unable to read ExtendedNat from %r" % (value,))

    @property
    def is_infinite(self) -> bool:
        return self._value is None

    @property
    def is_finite(self) -> bool:
        return self._value is not None

    @property
    def value(self) -> int:
        if self._value is None:
            raise ValueError("Infinity has no finite value")
        return self._value

    def to_json(self) -> Union[int, str]:
        return "inf" if self._value is None else self._value

    def _coerce(self, other) -> Optional["ExtendedNat"]:
        if isinstance(other, ExtendedNat):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return ExtendedNat(other)
        return None

    def __eq__(self, other) -> bool:
        other_nat = self._coerce(other)
        if other_nat is None:
            return NotImplemented
        return self._value == other_nat._value

    def __lt__(self, other) -> bool:
        other_nat = self._coerce(other)
        if other_nat is None:
            return NotImplemented
        if self._value is None:
            return False
        if other_nat._value is None:
            return True
        return self._value < other_nat._value

    def __hash__(self) -> int:
        return hash(("ExtendedNat", self._value))

    def __repr__(self) -> str:
        if self._value is None:
            return "Infinity"
        return "Finite(%d)" % self._value

    def __str__(self) -> str:
        return "inf" if self._value is None else str(self._value)


INFINITY = ExtendedNat.infinity()


def Finite(value: int) -> ExtendedNat:
    return ExtendedNat.finite(value)
