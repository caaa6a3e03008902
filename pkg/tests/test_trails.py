import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulerpart.errors import InsertionError, NotEulerianError
from eulerpart.graphs import Digraph, Multigraph
from eulerpart.partition import SetPartition
from eulerpart.trails import (
    Circuit,
    Trail,
    count_circuits_best,
    count_eulerian_circuits,
    cycle_partitions,
    cycle_sequence,
    det_bareiss,
    directed_cycles_through,
    eulerian_circuits,
    eulerian_trails_ending_at,
    insert_trail,
    intersection_graph,
    reassemble,
    edge_partition,
    trails_with_cycle_partition,
)


def test_trail_validation(two_cycle):
    w = Trail(two_cycle, (0, 1, 0), (0, 1))
    assert w.closed and len(w) == 2
    with pytest.raises(ValueError):
        Trail(two_cycle, (0, 1, 0), (0, 0))  # repeated edge
    with pytest.raises(ValueError):
        Trail(two_cycle, (1, 0, 1), (0, 1))  # wrong incidence


def test_circuit_canonical_rotation(three_cycle):
    w = Trail(three_cycle, (1, 2, 0, 1), (1, 2, 0))
    c = Circuit(w)
    assert c.edges == (0, 1, 2)
    assert c.vertices[0] == 0
    assert Circuit(w.rotate(2)) == c


@given(st.integers(min_value=0, max_value=10))
def test_circuit_invariant_under_rotation(k):
    d = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    w = Trail(d, (0, 1, 2, 0), (0, 1, 2))
    assert Circuit(w.rotate(k)) == Circuit(w)


def test_example_trail_counts(example_digraph):
    for e in example_digraph.edges():
        assert len(eulerian_trails_ending_at(example_digraph, e)) == 6
    assert len(eulerian_circuits(example_digraph)) == 6


def test_trails_trivial_cases(two_cycle):
    assert len(eulerian_trails_ending_at(two_cycle, 1)) == 1
    path = Digraph(2, [(0, 1)])
    assert eulerian_trails_ending_at(path, 0) == []
    with pytest.raises(ValueError):
        eulerian_trails_ending_at(two_cycle, 5)


def test_circuits_match_best_small(example_digraph, two_cycle, three_cycle):
    for d in (example_digraph, two_cycle, three_cycle):
        assert len(eulerian_circuits(d)) == count_circuits_best(d)
    assert count_circuits_best(example_digraph) == 6


def test_doubled_two_cycle_best_cross_check():
    d = Digraph(2, [(0, 1), (0, 1), (1, 0), (1, 0)])
    assert len(eulerian_circuits(d)) == count_circuits_best(d) == 2


def test_complete_digraph_k3_cross_check():
    d = Digraph(3, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)])
    assert len(eulerian_circuits(d)) == count_circuits_best(d)


def test_best_rejects_non_eulerian():
    with pytest.raises(NotEulerianError):
        count_circuits_best(Digraph(2, [(0, 1)]))


def test_count_for_undirected(doubled_edge, triangle):
    assert count_eulerian_circuits(doubled_edge) == 2
    assert count_eulerian_circuits(triangle) == 2
    assert (
        len(eulerian_trails_ending_at(doubled_edge, 0)) == 2
    )  # both directions of the final edge
    quad = Multigraph(2, [(0, 1)] * 4)
    assert count_eulerian_circuits(quad) == len(eulerian_trails_ending_at(quad, 0)) == 12


def test_det_bareiss():
    assert det_bareiss([[2, -1], [-1, 2]]) == 3
    assert det_bareiss([[0, 1], [1, 0]]) == -1
    assert det_bareiss([]) == 1
    assert det_bareiss([[2, 1], [4, 2]]) == 0


def test_cycle_sequence_simple(three_cycle):
    w = Trail(three_cycle, (0, 1, 2, 0), (0, 1, 2))
    cs = cycle_sequence(w)
    assert len(cs) == 1 and cs[0] == w


def test_cycle_sequence_figure_eight():
    # two directed triangles sharing vertex 0, traversed consecutively
    d = Digraph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    w = Trail(d, (0, 1, 2, 0, 3, 4, 0), (0, 1, 2, 3, 4, 5))
    cs = cycle_sequence(w)
    assert len(cs) == 2
    assert cs[0].edge_set() == frozenset({0, 1, 2})
    assert cs[1].edge_set() == frozenset({3, 4, 5})
    assert reassemble(cs) == w


def test_cycle_sequence_partitions_edges(example_digraph):
    a1 = SetPartition([{0, 1}, {2, 3}, {4, 5}, {6, 7}])
    a2 = SetPartition([{0, 2, 4}, {1, 3, 5}, {6, 7}])
    for e in example_digraph.edges():
        for w in eulerian_trails_ending_at(example_digraph, e):
            cs = cycle_sequence(w)
            part = edge_partition(cs)
            assert part in (a1, a2)
            assert reassemble(cs) == w


def test_insert_plain_concatenation(two_cycle):
    d = Digraph(3, [(0, 1), (1, 0), (0, 2), (2, 0)])
    w1 = Trail(d, (0, 1, 0), (0, 1))
    w2 = Trail(d, (0, 2, 0), (2, 3))
    merged = insert_trail(w1, w2)
    assert merged.edges == (0, 1, 2, 3)


def test_insert_at_interior_vertex():
    # square trail 0->1->2->3->0 with a triangle at vertex 2
    d = Digraph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5), (5, 2)])
    square = Trail(d, (0, 1, 2, 3, 0), (0, 1, 2, 3))
    tri = Trail(d, (2, 4, 5, 2), (4, 5, 6))
    merged = insert_trail(tri, square)
    assert len(merged) == 7
    assert merged.vertices == (0, 1, 2, 4, 5, 2, 3, 0)


def test_insert_error_clauses():
    d = Digraph(3, [(0, 1), (1, 0), (0, 2), (2, 0)])
    w1 = Trail(d, (0, 1, 0), (0, 1))
    with pytest.raises(InsertionError):
        insert_trail(w1, w1)  # edge overlap
    far = Digraph(4, [(0, 1), (1, 0), (2, 3), (3, 2)])
    with pytest.raises(InsertionError) as err:
        # no vertex of w1 occurs in a host on disjoint support
        insert_trail(
            Trail(far, (0, 1, 0), (0, 1)), Trail(far, (2, 3, 2), (2, 3))
        )
    assert err.value.clause == "base-occurs"


def test_insert_first_occurrence_violation():
    # host passes through vertex 1 before reaching the base 0 of w1
    d = Digraph(3, [(1, 2), (2, 0), (0, 1), (0, 2), (2, 1), (1, 0)])
    host = Trail(d, (1, 2, 0, 1), (0, 1, 2))
    w1 = Trail(d, (0, 2, 1, 0), (3, 4, 5))
    with pytest.raises(InsertionError) as err:
        insert_trail(w1, host)
    assert err.value.clause == "first-occurrence"


def test_trails_with_cycle_partition(example_digraph):
    a1 = SetPartition([{0, 1}, {2, 3}, {4, 5}, {6, 7}])
    a2 = SetPartition([{0, 2, 4}, {1, 3, 5}, {6, 7}])
    e = 0
    n1 = len(trails_with_cycle_partition(example_digraph, e, a1))
    n2 = len(trails_with_cycle_partition(example_digraph, e, a2))
    assert n1 + n2 == 6
    assert n1 == 4 and n2 == 2
    bad = SetPartition([{0, 1, 2, 3}, {4, 5}, {6, 7}])
    with pytest.raises(ValueError):
        trails_with_cycle_partition(example_digraph, e, bad)


def test_trails_with_cycle_partition_two_cycle(two_cycle):
    a = SetPartition([{0, 1}])
    assert len(trails_with_cycle_partition(two_cycle, 0, a)) == 1


def test_directed_cycles_through(example_digraph):
    cycles = directed_cycles_through(
        example_digraph, 0, set(example_digraph.edges())
    )
    # arc e1 (2->1) lies on the 2-cycle {e1,e2} and the 3-cycle {e1,f1,g1}
    assert frozenset({0, 1}) in cycles
    assert frozenset({0, 2, 4}) in cycles
    assert len(cycles) == 2


def test_cycle_partitions_example(example_digraph):
    parts = cycle_partitions(example_digraph)
    assert len(parts) == 2
    a1 = SetPartition([{0, 1}, {2, 3}, {4, 5}, {6, 7}])
    a2 = SetPartition([{0, 2, 4}, {1, 3, 5}, {6, 7}])
    assert set(parts) == {a1, a2}


def test_intersection_graph_example(example_digraph):
    a1 = SetPartition([{0, 1}, {2, 3}, {4, 5}, {6, 7}])
    g = intersection_graph(example_digraph, a1)
    assert g.n == 4 and g.is_simple()
    # K4 minus the edge between the {1,2}-cycle and the {3,4}-cycle
    assert g.m == 5
    a2 = SetPartition([{0, 2, 4}, {1, 3, 5}, {6, 7}])
    g2 = intersection_graph(example_digraph, a2)
    assert g2.n == 3 and g2.m == 3  # a triangle
