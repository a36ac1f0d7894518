"""
Shared fixtures.
"""
import pytest

from matchdim.config import Settings
from matchdim.models.graph import Graph
from matchdim.services.graph_ops import with_edges


@pytest.fixture
def settings():
    """Settings with the shipped defaults, independent of the environment."""
    return Settings(_env_file=None)


@pytest.fixture
def k2() -> Graph:
    return with_edges(2, [(0, 1)])


@pytest.fixture
def c3() -> Graph:
    return with_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def p4() -> Graph:
    """Path 0-1-2-3."""
    return with_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def c5() -> Graph:
    return with_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
