from fractions import Fraction

import pytest

from eulerpart.errors import CapExceededError
from eulerpart.graphs import Multigraph, orientations
from eulerpart.lattice import circuit_partition_counts
from eulerpart.poly import IntPoly
from eulerpart.trails import count_eulerian_circuits
from eulerpart.veblen import (
    VeblenMultigraph,
    associated_coefficient,
    associated_coefficient_via_rootings,
    charpoly_determinant_oracle,
    circuit_partitions_of_orientation,
    count_rooting_tuples,
    decomposition_classes,
    decompositions,
    elementary_subgraph_formula,
    enumerate_infragraphs,
    hs_characteristic_polynomial,
    is_decomposable,
    is_veblen,
    multiplicity_key,
    rooting_class_sizes,
    weight,
    weight_via_all_decompositions,
)


def k2():
    return Multigraph(2, [(0, 1)])


def k3():
    return Multigraph(3, [(0, 1), (0, 2), (1, 2)])


def p3():
    return Multigraph(3, [(0, 1), (1, 2)])


def doubled(n_copies=2):
    return VeblenMultigraph(2, [(0, 1)] * n_copies)


def triangle_v():
    return VeblenMultigraph(3, [(0, 1), (0, 2), (1, 2)])


def test_is_veblen():
    assert is_veblen(doubled())
    assert is_veblen(triangle_v())
    assert not is_veblen(k2())
    with pytest.raises(ValueError):
        VeblenMultigraph(2, [(0, 1)])


def test_enumerate_infragraphs_k2():
    found = enumerate_infragraphs(k2(), 4)
    assert [x.m for x in found] == [2, 4]  # doubled and quadrupled edge


def test_enumerate_infragraphs_k3():
    found = enumerate_infragraphs(k3(), 3)
    assert len(found) == 4  # three doubled edges and the triangle
    assert sorted(x.m for x in found) == [2, 2, 2, 3]


def test_enumerate_infragraphs_trivial_and_cap():
    assert enumerate_infragraphs(Multigraph(3, []), 4) == []
    with pytest.raises(CapExceededError):
        enumerate_infragraphs(k3(), 13)


def test_enumerate_infragraphs_can_be_disconnected():
    square = Multigraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    found = enumerate_infragraphs(square, 4)
    comps = {(x.m, x.component_count()) for x in found}
    assert (4, 2) in comps  # two disjoint doubled edges


def test_decompositions_doubled_edge():
    decs = decompositions(doubled())
    assert len(decs) == 1 and decs[0].block_count == 1


def test_decompositions_quadrupled_edge():
    x = doubled(4)
    decs = decompositions(x)
    assert sorted(d.block_count for d in decs) == [1, 2, 2, 2]
    classes = decomposition_classes(x)
    assert sorted(c.size for c in classes) == [1, 3]
    pairing = next(c for c in classes if c.size == 3)
    assert pairing.representative.symmetry_factor == 2
    assert pairing.representative.factorial_product == 4
    # |class| = M_X / (M_S * alpha)
    assert pairing.size == 24 // (4 * 2)


def test_decomposition_class_size_formula_sextupled():
    """Class sizes match M_X / (M_S * alpha) even with three same-shape
    blocks, which forces the factorial in alpha."""
    x = doubled(6)
    m_x = x.factorial_product
    for cls in decomposition_classes(x):
        dec = cls.representative
        assert cls.size * dec.factorial_product * dec.symmetry_factor == m_x
    pairings = next(
        c for c in decomposition_classes(x) if c.representative.block_count == 3
    )
    assert pairings.size == 15 and pairings.representative.symmetry_factor == 6


def test_decompositions_triangle():
    assert len(decompositions(triangle_v())) == 1


def test_decompositions_reject_odd_degrees():
    with pytest.raises(ValueError):
        decompositions(k2())


def test_is_decomposable():
    assert not is_decomposable(doubled())
    assert not is_decomposable(triangle_v())
    assert is_decomposable(doubled(4))
    figure_eight = VeblenMultigraph(
        5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]
    )
    assert is_decomposable(figure_eight)


def test_associated_coefficient_examples():
    assert associated_coefficient(doubled()) == 1
    assert associated_coefficient(triangle_v()) == 2
    assert associated_coefficient(doubled(4)) == Fraction(12, 24)


def test_associated_coefficient_rootings_route():
    for x in (doubled(), triangle_v(), doubled(4), doubled(6)):
        assert associated_coefficient(x) == associated_coefficient_via_rootings(x)


def test_rooting_class_sizes_against_exhaustive_tuples():
    for x in (doubled(), doubled(4), triangle_v()):
        for rep, size in rooting_class_sizes(x):
            assert size == count_rooting_tuples(rep)


def test_rooting_classes_partition_eulerian_orientations():
    """Vertex-fixing class sizes of balanced orientations sum to the number
    of balanced orientations."""
    for x in (doubled(4), triangle_v()):
        balanced = [o for o in orientations(x) if o.is_balanced()]
        groups = {}
        for o in balanced:
            groups.setdefault(multiplicity_key_digraph(o), []).append(o)
        class_reps = rooting_class_sizes(x)
        assert len(groups) == len(class_reps)


def multiplicity_key_digraph(d):
    counts = {}
    for a in d.arcs:
        counts[a] = counts.get(a, 0) + 1
    return tuple(sorted(counts.items()))


def test_weight_examples():
    assert weight(doubled()) == 1
    assert weight(triangle_v()) == 2
    assert weight(doubled(4)) == 0
    assert weight(doubled(6)) == 0


def test_weight_independent_of_n():
    for n in (0, 1, 5):
        assert weight(triangle_v(), n) == 2


def test_weight_quotient_matches_full_sum():
    for x in (doubled(), doubled(4), doubled(6), triangle_v()):
        assert weight(x) == weight_via_all_decompositions(x)


def test_weight_multiplicative_over_components():
    two_pairs = VeblenMultigraph(4, [(0, 1), (0, 1), (2, 3), (2, 3)])
    assert two_pairs.component_count() == 2
    assert weight(two_pairs) == 1
    pair_and_triangle = VeblenMultigraph(
        5, [(0, 1), (0, 1), (2, 3), (3, 4), (2, 4)]
    )
    assert weight(pair_and_triangle) == 2


def test_weight_vanishes_on_decomposables():
    figure_eight = VeblenMultigraph(
        5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]
    )
    assert weight(figure_eight) == 0
    doubled_path = VeblenMultigraph(3, [(0, 1), (0, 1), (1, 2), (1, 2)])
    assert weight(doubled_path) == 0


def test_circuit_partitions_of_orientation(example_digraph):
    f = circuit_partition_counts(example_digraph)
    assert circuit_partitions_of_orientation(example_digraph, 1) == f[0] == 6
    assert circuit_partitions_of_orientation(example_digraph, 2) == f[1] == 11
    assert circuit_partitions_of_orientation(example_digraph, 3) == f[2] == 6
    assert circuit_partitions_of_orientation(example_digraph, 4) == f[3] == 1
    assert circuit_partitions_of_orientation(example_digraph, 5) == 0


def test_circuit_partitions_match_lattice_counts(two_cycle):
    assert circuit_partitions_of_orientation(two_cycle, 1) == 1


def test_charpoly_oracle_known_values():
    t = IntPoly.t()
    assert charpoly_determinant_oracle(k2()) == t**2 - 1
    assert charpoly_determinant_oracle(k3()) == t**3 - 3 * t - 2
    assert charpoly_determinant_oracle(p3()) == t**3 - 2 * t
    c4 = Multigraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert charpoly_determinant_oracle(c4) == t**4 - 4 * t**2


def test_hs_polynomial_small_hosts():
    t = IntPoly.t()
    assert hs_characteristic_polynomial(k2()) == t**2 - 1
    assert hs_characteristic_polynomial(k3()) == t**3 - 3 * t - 2
    assert hs_characteristic_polynomial(p3()) == t**3 - 2 * t


def test_elementary_formula_small_hosts():
    t = IntPoly.t()
    assert elementary_subgraph_formula(k3()) == t**3 - 3 * t - 2
    assert elementary_subgraph_formula(Multigraph(3, [])) == t**3
    c4 = Multigraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert elementary_subgraph_formula(c4) == t**4 - 4 * t**2


def test_three_routes_agree_on_c4_and_k4():
    c4 = Multigraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    k4 = Multigraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    for g in (c4, k4):
        det = charpoly_determinant_oracle(g)
        assert hs_characteristic_polynomial(g) == det
        assert elementary_subgraph_formula(g) == det


def test_undirected_circuit_count_via_orientations(doubled_edge):
    assert count_eulerian_circuits(doubled_edge) == 2
