import doctest
import importlib

import pytest

MODULES = [
    "polys",
    "ratfun",
    "hermite",
    "shiftset",
    "reduction",
    "residues",
    "summability",
    "galois",
    "testkit",
    "cli",
]


@pytest.mark.parametrize("name", MODULES)
def test_module_doctests(name):
    mod = importlib.import_module(f"dresidues.{name}")
    result = doctest.testmod(mod)
    assert result.failed == 0
