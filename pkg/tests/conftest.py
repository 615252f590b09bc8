import pytest

from dalpha.census import all_connected, all_trees, all_unicyclic
from dalpha.verify import DEFAULT_ALPHA_GRID


@pytest.fixture(scope="session")
def alpha_grid():
    return DEFAULT_ALPHA_GRID


@pytest.fixture(scope="session")
def trees_small():
    """Trees for n=4..7, keyed by n."""
    return {n: list(all_trees(n).graphs) for n in range(4, 8)}


@pytest.fixture(scope="session")
def unicyclic_small():
    return {n: list(all_unicyclic(n).graphs) for n in range(4, 8)}


@pytest.fixture(scope="session")
def connected_small():
    return {n: list(all_connected(n).graphs) for n in range(2, 7)}
