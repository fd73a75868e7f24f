# -*- coding: utf-8 -*-
import logging

from typing import Optional

from .exceptions import ConfigException

logger = logging.getLogger(__name__)


class BaseDescriptor:
    """
    Base descriptor class

    New object should override __set__(self, instance, value) method to check
    if 'value' meets required needs.
    """

    def __get__(self, instance, owner):
        return instance.__dict__[self.name]

    def __set_name__(self, owner, name):
        self.name = name

    def __set__(self, instance, value):
        raise NotImplementedError("Setting value not implemented for this Validator!")


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


class ValidNonNegativeInt(BaseDescriptor):
    """
    Descriptor for attributes requiring an integer ``>= 0``
    """

    def __set__(self, instance, value):
        if not _is_int(value) or value < 0:
            raise ConfigException(
                f"'{self.name}' requires a non-negative integer, found {value!r}"
            )
        instance.__dict__[self.name] = value


class ValidPositiveInt(BaseDescriptor):
    """
    Descriptor for attributes requiring an integer ``>= 1``
    """

    def __set__(self, instance, value):
        if not _is_int(value) or value < 1:
            raise ConfigException(
                f"'{self.name}' requires a positive integer, found {value!r}"
            )
        instance.__dict__[self.name] = value


class ValidOptionalBudget(BaseDescriptor):
    """
    Descriptor for a step budget: ``None`` for the default, otherwise ``>= 0``
    """

    def __set__(self, instance, value: Optional[int]):
        if value is not None and (not _is_int(value) or value < 0):
            raise ConfigException(
                f"'{self.name}' requires None or a non-negative integer, found {value!r}"
            )
        instance.__dict__[self.name] = value


class ValidBool(BaseDescriptor):
    def __set__(self, instance, value):
        if not isinstance(value, bool):
            raise ConfigException(f"'{self.name}' requires a boolean, found {value!r}")
        instance.__dict__[self.name] = value
