import pytest
from hypothesis import settings

from cds_forge import new_graph

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")

# Running example used across the tests: 8 vertices, 10 edges, built from a
# 4-cycle 0-1-3-2 with a path 3-4-5-6 closed back through 1 and a 2-ear
# 6-7-3.  Degree peaks at 4 on vertex 3.
P8_EDGES = [
    (0, 1),
    (0, 2),
    (1, 3),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 6),
    (1, 6),
    (6, 7),
    (3, 7),
]


def cycle_edges(n):
    return [(i, (i + 1) % n) for i in range(n)]


def complete_edges(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


@pytest.fixture
def p8():
    return new_graph(8, P8_EDGES)


@pytest.fixture
def triangle():
    return new_graph(3, cycle_edges(3))


@pytest.fixture
def c4():
    return new_graph(4, cycle_edges(4))


@pytest.fixture
def c5():
    return new_graph(5, cycle_edges(5))


@pytest.fixture
def c6():
    return new_graph(6, cycle_edges(6))


@pytest.fixture
def k4():
    return new_graph(4, complete_edges(4))


@pytest.fixture
def k5():
    return new_graph(5, complete_edges(5))
