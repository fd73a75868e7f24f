# -*- coding: utf-8 -*-
import logging

from typing import Any, Dict, Optional

from .collapse import DEFAULT_RESTARTS
from .cw_oracle.cells import DEFAULT_MAX_CELLS
from .exceptions import ConfigException
from .two_torus import DEFAULT_ENUMERATION_CAP
from .validators import (
    ValidBool,
    ValidNonNegativeInt,
    ValidOptionalBudget,
    ValidPositiveInt,
)

logger = logging.getLogger(__name__)


class AnalysisOptions:
    """
    Run-time knobs shared by ``analyze`` and ``exhaustive``.

    Examples
    --------
    >>> options = AnalysisOptions(collapse_budget=0, seed=3)
    >>> options.to_dict()["seed"]
    3
    >>> AnalysisOptions.from_dict(options.to_dict()) == options
    True
    """

    collapse_budget = ValidOptionalBudget()
    restarts = ValidNonNegativeInt()
    seed = ValidNonNegativeInt()
    max_cells = ValidPositiveInt()
    enumeration_cap = ValidPositiveInt()
    oracle = ValidBool()
    threads = ValidPositiveInt()

    def __init__(
        self,
        collapse_budget: Optional[int] = None,
        restarts: int = DEFAULT_RESTARTS,
        seed: int = 0,
        max_cells: int = DEFAULT_MAX_CELLS,
        enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
        oracle: bool = False,
        threads: int = 1,
    ):
        """
        Parameters
        ----------
        collapse_budget: Optional[int]
            Steps per collapse attempt. ``None`` means twice the face count,
            ``0`` disables the collapse search.
        restarts: int
            Extra collapse attempts with shuffled tie-breaking.
        seed: int
            Seed for the shuffles.
        max_cells: int
            Largest cell count the oracle may build.
        enumeration_cap: int
            Largest group rank whose elements are enumerated.
        oracle: bool
            Run the cellular cross-checks.
        threads: int
            Workers for the exhaustive suites.
        """
        self.collapse_budget = collapse_budget
        self.restarts = restarts
        self.seed = seed
        self.max_cells = max_cells
        self.enumeration_cap = enumeration_cap
        self.oracle = oracle
        self.threads = threads

    def to_dict(self) -> Dict[str, Any]:
        return {
            "collapse_budget": self.collapse_budget,
            "restarts": self.restarts,
            "seed": self.seed,
            "max_cells": self.max_cells,
            "enumeration_cap": self.enumeration_cap,
            "oracle": self.oracle,
            "threads": self.threads,
        }

    @classmethod
    def from_dict(cls, config: Dict[str, Any]) -> "AnalysisOptions":
        unknown = set(config) - set(cls().to_dict())
        if unknown:
            raise ConfigException(
                f"Unknown options: {', '.join(sorted(unknown))}"
            )
        return cls(**config)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AnalysisOptions):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self) -> str:
        fields = ", ".join(f"{key}={value!r}" for key, value in self.to_dict().items())
        return f"AnalysisOptions({fields})"
