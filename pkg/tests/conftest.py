"""Shared fixtures: the running example digraph and small named graphs."""

import pytest

from eulerpart.graphs import Digraph, Multigraph


# Four vertices, eight arcs: one directed 2-cycle between each of the pairs
# {1,2}, {1,3}, {2,3}, {3,4}.  Used throughout the suite and shipped as
# graphs/example_digraph.txt.  Vertex ids are 0-based (file labels 1..4).
EXAMPLE_ARCS = [
    (1, 0),  # e1: 2 -> 1
    (0, 1),  # e2: 1 -> 2
    (0, 2),  # f1: 1 -> 3
    (2, 0),  # f2: 3 -> 1
    (2, 1),  # g1: 3 -> 2
    (1, 2),  # g2: 2 -> 3
    (3, 2),  # h1: 4 -> 3
    (2, 3),  # h2: 3 -> 4
]
EXAMPLE_EDGE_LABELS = ["e1", "e2", "f1", "f2", "g1", "g2", "h1", "h2"]


@pytest.fixture(scope="session")
def example_digraph():
    return Digraph(4, EXAMPLE_ARCS, ["1", "2", "3", "4"], EXAMPLE_EDGE_LABELS)


@pytest.fixture
def two_cycle():
    return Digraph(2, [(0, 1), (1, 0)])


@pytest.fixture
def three_cycle():
    return Digraph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def triangle():
    return Multigraph(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def doubled_edge():
    return Multigraph(2, [(0, 1), (0, 1)])
