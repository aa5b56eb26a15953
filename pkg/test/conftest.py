"""Shared instances for the bdsa test suite.

f1 loop, f2 two loops on one atom, f3 arrow, f4 two separate loops,
f5 loop with an exit into a sink.
"""

import copy

import pytest

from bdsa.config import Config
from bdsa.instance_io import parse_instance

TEXTS = {
    "f1": "atoms a\nlabels x\nact x a = {a}\n",
    "f2": "atoms a\nlabels x y\nact x a = {a}\nact y a = {a}\n",
    "f3": "atoms a b\nlabels x\nact x a = {b}\n",
    "f4": "atoms a b\nlabels x y\nact x a = {a}\nact y b = {b}\n",
    "f5": "atoms a b\nlabels x y\nact x a = {a}\nact y a = {b}\n",
}


@pytest.fixture(autouse=True)
def restore_config():
    """Save & restore the class-level Config between tests."""
    saved = copy.deepcopy(Config._config)
    yield
    Config._config = saved


@pytest.fixture
def fixture_texts():
    return dict(TEXTS)


@pytest.fixture
def f1():
    return parse_instance(TEXTS["f1"])


@pytest.fixture
def f2():
    return parse_instance(TEXTS["f2"])


@pytest.fixture
def f3():
    return parse_instance(TEXTS["f3"])


@pytest.fixture
def f4():
    return parse_instance(TEXTS["f4"])


@pytest.fixture
def f5():
    return parse_instance(TEXTS["f5"])


@pytest.fixture
def f1_relative():
    """f1 with J = ∅."""
    return parse_instance(TEXTS["f1"] + "J = {}\n")
