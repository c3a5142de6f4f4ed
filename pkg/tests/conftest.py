"""Shared fixtures.  Towers are expensive enough to build once per session."""

import pytest

from hermquot.gf import build_tower


@pytest.fixture(scope="session")
def towers():
    """Dict q -> FieldTower for the small q used throughout the tests."""
    cache = {}
    for p, e in [(2, 1), (2, 2), (3, 1), (2, 3), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1)]:
        tw = build_tower(p, e)
        cache[tw.q] = tw
    return cache


@pytest.fixture(scope="session")
def tw2(towers):
    return towers[2]


@pytest.fixture(scope="session")
def tw3(towers):
    return towers[3]


@pytest.fixture(scope="session")
def tw4(towers):
    return towers[4]


@pytest.fixture(scope="session")
def tw5(towers):
    return towers[5]


@pytest.fixture(scope="session")
def tw7(towers):
    return towers[7]


@pytest.fixture(scope="session")
def tw8(towers):
    return towers[8]


@pytest.fixture(scope="session")
def tw9(towers):
    return towers[9]
