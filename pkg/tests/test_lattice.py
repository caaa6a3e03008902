import pytest

from eulerpart.errors import NotEulerianError
from eulerpart.graphs import Digraph, is_eulerian
from eulerpart.lattice import (
    signed_circuit_product,
    downset_sum,
    build_eulerian_semilattice,
    circuit_partition_counts,
    martin_chromatic_identity,
    martin_divisibility,
    martin_polynomial,
    verify_cancellation,
)
from eulerpart.partition import SetPartition, all_set_partitions
from eulerpart.poly import IntPoly

A1 = SetPartition([{0, 1}, {2, 3}, {4, 5}, {6, 7}])
A2 = SetPartition([{0, 2, 4}, {1, 3, 5}, {6, 7}])
TOP = SetPartition([set(range(8))])


def test_F_values_from_the_worked_example(example_digraph):
    d = example_digraph
    assert signed_circuit_product(d, TOP) == -6
    assert signed_circuit_product(d, A1) == 1  # bottom: four 2-cycles
    assert signed_circuit_product(d, A2) == -1
    # the {e,f,g}|{h} coarsening has three circuits on the left block
    efg_h = SetPartition([{0, 1, 2, 3, 4, 5}, {6, 7}])
    assert signed_circuit_product(d, efg_h) == 3
    fgh_e = SetPartition([{2, 3, 4, 5, 6, 7}, {0, 1}])
    assert signed_circuit_product(d, fgh_e) == 2
    # disconnected block: F vanishes
    eh_fg = SetPartition([{0, 1, 6, 7}, {2, 3, 4, 5}])
    assert signed_circuit_product(d, eh_fg) == 0


def test_build_T_example_structure(example_digraph):
    lattice = build_eulerian_semilattice(example_digraph)
    assert len(lattice) == 16
    assert set(lattice.minimal) == {A1, A2}
    assert lattice.top in lattice
    by_size = {}
    for b in lattice.elements:
        by_size.setdefault(len(b), []).append(lattice.signed_product(b))
    assert by_size[1] == [-6]
    assert sorted(by_size[2]) == [1, 1, 1, 1, 1, 1, 2, 3]
    assert by_size[3] == [-1] * 6
    assert by_size[4] == [1]


def test_build_T_matches_bell_filter_oracle():
    """Element set equals the brute-force filter of every set partition by
    the nonvanishing-F predicate."""
    digraphs = [
        Digraph(2, [(0, 1), (1, 0)]),
        Digraph(2, [(0, 1), (1, 0), (0, 1), (1, 0)]),
        Digraph(3, [(0, 1), (1, 2), (2, 0), (0, 2), (2, 1), (1, 0)]),
        Digraph(3, [(0, 1), (1, 0), (1, 2), (2, 1)]),
    ]
    for d in digraphs:
        lattice = build_eulerian_semilattice(d)
        brute = {
            b
            for b in all_set_partitions(range(d.m))
            if signed_circuit_product(d, b) != 0
        }
        assert set(lattice.elements) == brute


def test_build_T_rejects_non_eulerian():
    with pytest.raises(NotEulerianError):
        build_eulerian_semilattice(Digraph(2, [(0, 1)]))


def test_build_T_two_cycle(two_cycle):
    lattice = build_eulerian_semilattice(two_cycle)
    assert len(lattice) == 1


def test_join_closure(example_digraph):
    lattice = build_eulerian_semilattice(example_digraph)
    elements = lattice.elements
    for a in elements:
        for b in elements:
            assert a.join(b) in lattice


def test_G_values(example_digraph):
    lattice = build_eulerian_semilattice(example_digraph)
    assert downset_sum(lattice, lattice.top) == 0
    for a in lattice.minimal:
        assert downset_sum(lattice, a) == (-1) ** len(a)
    for b in lattice.elements:
        if b not in lattice.minimal and b != lattice.top:
            assert downset_sum(lattice, b) == 0
    with pytest.raises(ValueError):
        downset_sum(lattice, SetPartition([{0, 1, 6, 7}, {2, 3, 4, 5}]))


def test_mobius_inversion(example_digraph):
    lattice = build_eulerian_semilattice(example_digraph)
    top = lattice.top
    total = sum(
        lattice.mobius(b, top) * lattice.downset_sum(b) for b in lattice.elements
    )
    assert total == lattice.signed_product(top) == -6


def test_mobius_restricts_to_up_sets(example_digraph):
    from eulerpart.poset import subposet

    lattice = build_eulerian_semilattice(example_digraph)
    top = lattice.top
    for a in lattice.elements:
        up = subposet(lattice.poset, lattice.poset.up_set(a))
        assert lattice.mobius(a, top) == up.mobius(a, top)


def test_circuit_partition_counts(example_digraph, two_cycle):
    assert circuit_partition_counts(example_digraph) == (6, 11, 6, 1)
    assert circuit_partition_counts(two_cycle) == (1,)


def test_counts_match_direct_partition_enumeration(example_digraph):
    """f_k again, from scratch: scan every set partition of the arc set."""
    d = example_digraph
    totals = {}
    for b in all_set_partitions(range(d.m)):
        value = signed_circuit_product(d, b)
        if value:
            k = len(b)
            totals[k] = totals.get(k, 0) + (-1) ** k * value
    f = circuit_partition_counts(d)
    assert totals == {k: fk for k, fk in enumerate(f, start=1)}


def test_martin_polynomial_example(example_digraph):
    polys = martin_polynomial(example_digraph)
    t = IntPoly.t()
    assert polys.s == t**3 + 3 * t**2 + 2 * t
    assert polys.s == t * (t + 1) * (t + 2)
    assert polys.r == 6 * t + 11 * t**2 + 6 * t**3 + t**4
    assert polys.s(1) == 6
    assert polys.s(2) == 24
    assert polys.r(0) == 0
    # s(2) equals the product of out-degree factorials
    prod = 1
    for v in range(example_digraph.n):
        for i in range(2, example_digraph.out_degree(v) + 1):
            prod *= i
    assert polys.s(2) == prod


def test_martin_polynomial_cycle(three_cycle):
    polys = martin_polynomial(three_cycle)
    assert polys.s == IntPoly.one()
    assert polys.r == IntPoly.t()


def test_cancellation(example_digraph, two_cycle, three_cycle):
    rep = verify_cancellation(example_digraph)
    assert rep.alternating_sum == 0 and rep.holds and not rep.is_single_cycle
    rep3 = verify_cancellation(three_cycle)
    assert rep3.alternating_sum == -1 and rep3.is_single_cycle and rep3.holds
    rep2 = verify_cancellation(two_cycle)
    assert rep2.alternating_sum == -1 and rep2.is_single_cycle


def test_martin_chromatic_identity_example(example_digraph):
    report = martin_chromatic_identity(example_digraph)
    t = IntPoly.t()
    chis = {a: chi for a, chi in report.chi_by_partition}
    assert chis[A1] == t**3 - 5 * t**2 + 8 * t - 4
    assert chis[A2] == t**2 - 3 * t + 2
    assert report.holds and report.r_identity_holds


def test_martin_chromatic_identity_single_cycle(three_cycle):
    report = martin_chromatic_identity(three_cycle)
    assert report.holds and report.r_identity_holds
    assert report.lhs == IntPoly.one()


def test_divisibility_example(example_digraph):
    rep = martin_divisibility(example_digraph)
    t = IntPoly.t()
    assert rep.divisor == t * (t + 1)
    assert rep.divisible and rep.quotient == t + 2


def test_divisibility_rejects_small_degree(three_cycle):
    with pytest.raises(ValueError):
        martin_divisibility(three_cycle)


def test_delta_two_vanishes_at_zero():
    d = Digraph(3, [(0, 1), (1, 0), (1, 2), (2, 1)])
    assert is_eulerian(d)
    rep = martin_divisibility(d)
    assert rep.divisible
    assert martin_polynomial(d).s(0) == 0
