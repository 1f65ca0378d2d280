"""Run the docstring examples in every library module."""

import doctest
import importlib

import pytest

MODULES = [
    "rascent.words",
    "rascent.maps",
    "rascent.patterns",
    "rascent.gentree",
    "rascent.series",
    "rascent.oracle",
    "rascent.verify",
    "rascent.cli",
]


@pytest.mark.parametrize("name", MODULES)
def test_module_doctests(name):
    module = importlib.import_module(name)
    result = doctest.testmod(module, verbose=False)
    assert result.failed == 0
