import pytest

from congest_diam1 import Digraph


@pytest.fixture
def tournament3() -> Digraph:
    """Transitive tournament a=0 -> b=1 -> c=2 with a -> c."""
    return Digraph(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def cycle3() -> Digraph:
    return Digraph(3, [(0, 1), (1, 2), (2, 0)])
