# -*- coding: utf-8 -*-
import pytest

from rzk_index.exceptions import ConfigException, InputError
from rzk_index.options import AnalysisOptions


def test_defaults():
    options = AnalysisOptions()
    assert options.collapse_budget is None
    assert options.restarts == 8
    assert options.seed == 0
    assert options.max_cells == 1 << 22
    assert options.enumeration_cap == 20
    assert options.oracle is False
    assert options.threads == 1


@pytest.mark.parametrize(
    "kwargs",
    [
        {"collapse_budget": -3},
        {"collapse_budget": "10"},
        {"restarts": -1},
        {"seed": True},
        {"seed": 1.5},
        {"max_cells": 0},
        {"enumeration_cap": 0},
        {"oracle": "yes"},
        {"threads": 0},
    ],
)
def test_invalid_values(kwargs):
    with pytest.raises(ConfigException):
        AnalysisOptions(**kwargs)


def test_config_exception_is_an_input_error():
    with pytest.raises(InputError):
        AnalysisOptions(threads=-2)


def test_validation_applies_on_assignment():
    options = AnalysisOptions()
    options.collapse_budget = 0
    assert options.collapse_budget == 0
    with pytest.raises(ConfigException):
        options.restarts = None


def test_from_dict():
    options = AnalysisOptions.from_dict({"seed": 4, "oracle": True})
    assert options.seed == 4
    assert options.oracle
    assert AnalysisOptions.from_dict(options.to_dict()) == options
    assert options != AnalysisOptions()


def test_from_dict_rejects_unknown_keys():
    with pytest.raises(ConfigException) as exc_info:
        AnalysisOptions.from_dict({"seed": 1, "colapse": 3})
    assert "colapse" in str(exc_info.value)


def test_repr():
    assert repr(AnalysisOptions(seed=2)).startswith(
        "AnalysisOptions(collapse_budget=None, restarts=8, seed=2"
    )
