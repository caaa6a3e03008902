"""Bond lattices, broken circuits, NBC bases, chromatic polynomials, and the
two explicit dictionaries from NBC bases to acyclic unique-sink orientations.

The chromatic polynomial has two independent routes (deletion-contraction
in production, the broken-circuit subset sum for verification), so the
downstream Martin-polynomial identity is a genuine cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from eulerpart.errors import CapExceededError
from eulerpart.graphs import Digraph, orientations
from eulerpart.heaps import (
    Heap,
    PieceSystem,
    compose,
    orientation_to_pyramid,
    pyramid_to_orientation,
)
from eulerpart.partition import SetPartition
from eulerpart.poly import IntPoly
from eulerpart.poset import FinitePoset

CYCLE_ENUM_VERTEX_CAP = 8
CYCLE_ENUM_EDGE_CAP = 16


def require_simple(g):
    if g.directed:
        raise ValueError("expected an undirected simple graph")
    if not g.is_simple():
        raise ValueError("parallel edges are not allowed here")


def connected_partitions(g):
    """Partitions of the vertex set into blocks inducing connected subgraphs.

    The blocks are frozensets of vertex ids; recursion pivots on the least
    unplaced vertex.
    """
    require_simple(g)
    verts = list(range(g.n))
    out = []

    def rec(remaining, blocks):
        if not remaining:
            out.append(list(blocks))
            return
        pivot = min(remaining)
        pool = sorted(remaining - {pivot})
        for r in range(len(pool) + 1):
            for extra in combinations(pool, r):
                block = frozenset((pivot, *extra))
                if _induces_connected(g, block):
                    blocks.append(block)
                    rec(remaining - block, blocks)
                    blocks.pop()

    rec(frozenset(verts), [])
    return out


def _induces_connected(g, block):
    if len(block) == 1:
        return True
    start = min(block)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for _, v in g.incident(u):
            if v in block and v not in seen:
                seen.add(v)
                stack.append(v)
    return seen == block


class BondLattice:
    """Connected-block vertex partitions of a simple graph under refinement.

    Rank of a partition is n minus its block count; for connected graphs the
    top is the one-block partition.
    """

    def __init__(self, graph):
        require_simple(graph)
        self.graph = graph
        elements = sorted(
            (SetPartition(blocks) for blocks in connected_partitions(graph)),
            key=lambda p: (-len(p), tuple(tuple(sorted(b)) for b in p.blocks)),
        )
        self.poset = FinitePoset.from_leq(elements, lambda a, b: a.refines(b))

    @property
    def elements(self):
        return self.poset.elements

    def __len__(self):
        return len(self.poset)

    def __contains__(self, x):
        return x in self.poset

    def bottom(self):
        return self.poset.bottom()

    def top(self):
        return self.poset.top()

    def mobius(self, a, b):
        return self.poset.mobius(a, b)

    def rank(self, x=None):
        if x is None:
            return self.poset.rank()
        return self.poset.rank_function()[x]

    def characteristic_polynomial(self):
        return self.poset.characteristic_polynomial()

    def closed_edge_set(self, x):
        """The closure-map image of an element: all edges inside its blocks."""
        return frozenset(
            e
            for e in self.graph.edges()
            if any(self.graph.pairs[e] <= b for b in x.blocks)
        )


def build_bond_lattice(g):
    return BondLattice(g)


def check_edge_order(g, order):
    order = tuple(order)
    if sorted(order) != sorted(g.edges()):
        raise ValueError("edge order must be a permutation of the edge ids")
    return order


def simple_cycles(g):
    """Vertex-simple cycles of length >= 3, each as a frozenset of edge ids.

    Exhaustive; refuses graphs beyond the desk-scale caps.
    """
    require_simple(g)
    if g.n > CYCLE_ENUM_VERTEX_CAP or g.m > CYCLE_ENUM_EDGE_CAP:
        raise CapExceededError(
            f"cycle enumeration capped at {CYCLE_ENUM_VERTEX_CAP} vertices / "
            f"{CYCLE_ENUM_EDGE_CAP} edges"
        )
    cycles = []
    for root in range(g.n):
        stack = [(root, [root], [])]
        while stack:
            u, vpath, epath = stack.pop()
            for e, w in g.incident(u):
                if w == root and len(vpath) >= 3 and e != epath[-1]:
                    # close only in one direction to avoid the mirror copy
                    if vpath[1] < vpath[-1]:
                        cycles.append(frozenset(epath + [e]))
                elif w > root and w not in vpath:
                    stack.append((w, vpath + [w], epath + [e]))
    return sorted(set(cycles), key=sorted)


def broken_circuits(g, order):
    """Each cycle minus its largest edge in the given linear order."""
    order = check_edge_order(g, order)
    rank = {e: i for i, e in enumerate(order)}
    out = set()
    for cycle in simple_cycles(g):
        top = max(cycle, key=rank.__getitem__)
        out.add(cycle - {top})
    return out


def _is_forest(g, edge_subset):
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edge_subset:
        u, v = sorted(g.pairs[e])
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def spanning_trees(g):
    """Edge sets of spanning trees of a connected simple graph."""
    require_simple(g)
    n, edges = g.n, list(g.edges())
    out = []
    for combo in combinations(edges, n - 1):
        if _is_forest(g, combo):
            out.append(frozenset(combo))
    return out


def nbc_sets(g, order):
    """All subsets of edges containing no broken circuit.

    These are exactly the forests avoiding the broken circuits; every other
    subset contains a full cycle, hence a broken circuit.
    """
    broken = sorted(broken_circuits(g, order), key=len)
    out = []
    for size in range(g.n):
        for combo in combinations(list(g.edges()), size):
            edge_set = frozenset(combo)
            if not _is_forest(g, combo):
                continue
            if any(b <= edge_set for b in broken):
                continue
            out.append(edge_set)
    return out


def nbc_bases(g, order):
    """NBC spanning trees of a connected simple graph."""
    require_simple(g)
    if not g.edge_support_connected() and g.n > 1:
        raise ValueError("NBC bases are defined here for connected graphs")
    if g.n == 1:
        return [frozenset()]
    broken = broken_circuits(g, order)
    return [
        t for t in spanning_trees(g) if not any(b <= t for b in broken)
    ]


def edge_set_join(g, edge_subset):
    """The bond-lattice element spanned by an edge subset: components of the
    spanning subgraph, as a vertex partition."""
    parent = {v: v for v in range(g.n)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edge_subset:
        u, v = sorted(g.pairs[e])
        parent[find(u)] = find(v)
    groups = {}
    for v in range(g.n):
        groups.setdefault(find(v), set()).add(v)
    return SetPartition(groups.values())


def nbc_sets_by_element(g, order):
    """Group all NBC sets by the lattice element they span."""
    grouped = {}
    for s in nbc_sets(g, order):
        grouped.setdefault(edge_set_join(g, s), []).append(s)
    return grouped


@dataclass(frozen=True)
class RotaReport:
    checked: int
    failures: tuple

    @property
    def ok(self):
        return not self.failures


def rota_check(lattice, order):
    """Möbius values from the bottom against signed NBC-base counts, at
    every lattice element."""
    g = lattice.graph
    grouped = nbc_sets_by_element(g, order)
    bottom = lattice.bottom()
    ranks = lattice.poset.rank_function()
    failures = []
    for x in lattice.elements:
        mu = lattice.mobius(bottom, x)
        count = len(grouped.get(x, ()))
        if mu != (-1) ** ranks[x] * count:
            failures.append((x, mu, count))
    return RotaReport(len(lattice.elements), tuple(failures))


# ---------------------------------------------------------------------------
# chromatic polynomials, two routes
# ---------------------------------------------------------------------------


def chromatic_polynomial(g):
    """Deletion-contraction with memoisation on the labeled edge set."""
    require_simple(g)
    memo = {}

    def rec(vertices, edges):
        key = (vertices, edges)
        if key in memo:
            return memo[key]
        if not edges:
            result = IntPoly.monomial(len(vertices))
        else:
            u, v = sorted(min(edges, key=sorted))
            deleted = edges - {frozenset((u, v))}
            # contract v into u: rename v-endpoints, drop the loop, merge parallels
            contracted = frozenset(
                frozenset(u if w == v else w for w in pair)
                for pair in deleted
                if pair != frozenset((u, v))
            )
            contracted = frozenset(pair for pair in contracted if len(pair) == 2)
            result = rec(vertices, deleted) - rec(vertices - {v}, contracted)
        memo[key] = result
        return result

    return rec(frozenset(range(g.n)), frozenset(g.pairs))


def chromatic_polynomial_whitney(g, order=None):
    """Verification route: alternating subset sum over NBC sets."""
    require_simple(g)
    order = check_edge_order(g, order if order is not None else tuple(g.edges()))
    coeffs = [0] * (g.n + 1)
    for s in nbc_sets(g, order):
        coeffs[g.n - len(s)] += (-1) ** len(s)
    return IntPoly(coeffs)


# ---------------------------------------------------------------------------
# acyclic orientations
# ---------------------------------------------------------------------------


def _is_acyclic(d):
    state = [0] * d.n

    def visit(u):
        state[u] = 1
        for _, w in d.out_arcs(u):
            if state[w] == 1:
                return False
            if state[w] == 0 and not visit(w):
                return False
        state[u] = 2
        return True

    return all(state[v] != 0 or visit(v) for v in range(d.n))


def acyclic_orientations(g):
    require_simple(g)
    return [o for o in orientations(g) if _is_acyclic(o)]


def sinks(d):
    return [v for v in range(d.n) if d.out_degree(v) == 0]


def unique_sink_orientations(g, x):
    """Acyclic orientations whose only sink is x, in deterministic order."""
    require_simple(g)
    if not (0 <= x < g.n):
        raise ValueError(f"unknown vertex {x}")
    return [o for o in acyclic_orientations(g) if sinks(o) == [x]]


# ---------------------------------------------------------------------------
# the explicit dictionary and its recursive twin
# ---------------------------------------------------------------------------


def _check_nbc_base(g, t, order):
    t = frozenset(t)
    if len(t) != g.n - 1 or not _is_forest(g, t):
        raise ValueError("not a spanning tree")
    if edge_set_join(g, t) != SetPartition.indiscrete(range(g.n)):
        raise ValueError("not a spanning tree")
    if any(b <= t for b in broken_circuits(g, order)):
        raise ValueError("spanning tree contains a broken circuit")
    return t


def _tree_paths(g, t, x):
    """Parent arcs toward the root x inside the tree edge set t."""
    adj = {v: [] for v in range(g.n)}
    for e in t:
        u, v = sorted(g.pairs[e])
        adj[u].append((e, v))
        adj[v].append((e, u))
    parent = {x: None}
    stack = [x]
    while stack:
        u = stack.pop()
        for e, w in adj[u]:
            if w not in parent:
                parent[w] = (e, u)
                stack.append(w)
    path_edges = {}
    path_vertices = {}
    for v in range(g.n):
        edges = []
        verts = [v]
        cur = v
        while parent[cur] is not None:
            e, nxt = parent[cur]
            edges.append(e)
            verts.append(nxt)
            cur = nxt
        path_edges[v] = edges
        path_vertices[v] = verts
    return path_edges, path_vertices


def base_to_orientation_direct(t, g, x, order):
    """Root-path comparison orientation of an NBC base.

    For each ordered pair, the largest tree edge between the vertex and the
    meet of the two root paths decides the linear order; every graph edge is
    oriented toward its smaller endpoint, so x is the unique sink.
    """
    require_simple(g)
    order = check_edge_order(g, order)
    t = _check_nbc_base(g, t, order)
    rank = {e: i for i, e in enumerate(order)}
    path_edges, path_vertices = _tree_paths(g, t, x)

    def meet(i, j):
        ri = path_vertices[i]
        rj = set(path_vertices[j])
        for v in ri:
            if v in rj:
                return v
        raise AssertionError("root paths always meet at the root")

    def top_edge_to_meet(i, j):
        """Largest edge on the path from i down to meet(i, j); None when i
        lies on j's root path (the null edge, smaller than everything)."""
        m = meet(i, j)
        if m == i:
            return None
        drop = len(path_edges[m])
        segment = path_edges[i][: len(path_edges[i]) - drop]
        return max(segment, key=rank.__getitem__)

    def precedes(j, i):
        e_ij = top_edge_to_meet(i, j)
        e_ji = top_edge_to_meet(j, i)
        if e_ji is None:
            return e_ij is not None
        if e_ij is None:
            return False
        return rank[e_ji] < rank[e_ij]

    arcs = []
    for e in g.edges():
        i, j = sorted(g.pairs[e])
        if precedes(j, i):
            arcs.append((i, j))
        else:
            arcs.append((j, i))
    return Digraph(g.n, arcs, g.vertex_labels, g.edge_labels)


def _max_edge_of_induced(g, vertex_set, rank):
    best = None
    for e in g.edges():
        if g.pairs[e] <= vertex_set:
            if best is None or rank[e] > rank[best]:
                best = e
    return best


def _base_pyramid(g, ps, t, vertex_set, x, rank):
    if len(vertex_set) == 1:
        return Heap.singleton(x)
    e_top = _max_edge_of_induced(g, vertex_set, rank)
    assert e_top is not None, "connected induced subgraph with >= 2 vertices has an edge"
    assert e_top in t, "an NBC base always contains the largest induced edge"
    remaining = t - {e_top}
    side = _component_of(g, remaining, x, vertex_set)
    other = vertex_set - side
    u = next(iter(g.pairs[e_top] & other))
    p1 = _base_pyramid(g, ps, remaining & _edges_within(g, other), other, u, rank)
    p2 = _base_pyramid(g, ps, remaining & _edges_within(g, side), side, x, rank)
    return compose(ps, p1, p2)


def _edges_within(g, vertex_set):
    return frozenset(e for e in g.edges() if g.pairs[e] <= vertex_set)


def _component_of(g, edge_subset, x, vertex_set):
    seen = {x}
    stack = [x]
    incident = {v: [] for v in vertex_set}
    for e in edge_subset:
        u, v = sorted(g.pairs[e])
        incident[u].append(v)
        incident[v].append(u)
    while stack:
        u = stack.pop()
        for w in incident[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def base_to_orientation_recursive(t, g, x, order):
    """Recursive twin of ``base_to_orientation_direct``: split the NBC base at the largest
    induced edge, compose the two pyramids, then orient lower-to-higher."""
    require_simple(g)
    order = check_edge_order(g, order)
    t = _check_nbc_base(g, t, order)
    rank = {e: i for i, e in enumerate(order)}
    ps = PieceSystem(g)
    pyramid = _base_pyramid(g, ps, t, frozenset(range(g.n)), x, rank)
    return pyramid_to_orientation(ps, pyramid)


def orientation_to_base(o, g, x, order):
    """Inverse dictionary: from an acyclic unique-sink orientation back to
    the NBC base, peeling the largest induced edge at each level."""
    require_simple(g)
    order = check_edge_order(g, order)
    if sinks(o) != [x]:
        raise ValueError(f"orientation does not have unique sink {x}")
    ps = PieceSystem(g)
    pyramid = orientation_to_pyramid(ps, o)
    rank = {e: i for i, e in enumerate(order)}

    def rec(pyr, vertex_set, root):
        if len(vertex_set) == 1:
            return frozenset()
        e_top = _max_edge_of_induced(g, vertex_set, rank)
        p, q = sorted(g.pairs[e_top])
        y = p if pyr.less(p, q) else q
        down = pyr.down_set(y)
        p1 = pyr.restrict(down)
        p2 = pyr.restrict(set(pyr.elements) - down)
        return (
            frozenset({e_top})
            | rec(p1, frozenset(p1.elements), y)
            | rec(p2, frozenset(p2.elements), root)
        )

    return rec(pyramid, frozenset(range(g.n)), x)


@dataclass(frozen=True)
class OrientationCountReport:
    total_acyclic: int
    unique_sink_counts: tuple  # per vertex
    chromatic: IntPoly
    abs_value_at_minus_one: int
    abs_linear_coefficient: int

    @property
    def total_matches_value_at_minus_one(self):
        return self.total_acyclic == self.abs_value_at_minus_one

    @property
    def unique_sink_matches_linear_coefficient(self):
        return all(
            c == self.abs_linear_coefficient for c in self.unique_sink_counts
        )


def orientation_counts_vs_chromatic(g):
    """Count acyclic orientations (total and per unique sink) and report
    which chromatic-polynomial statistic each one matches."""
    require_simple(g)
    acyclic = acyclic_orientations(g)
    per_vertex = []
    for x in range(g.n):
        per_vertex.append(sum(1 for o in acyclic if sinks(o) == [x]))
    chrom = chromatic_polynomial(g)
    return OrientationCountReport(
        total_acyclic=len(acyclic),
        unique_sink_counts=tuple(per_vertex),
        chromatic=chrom,
        abs_value_at_minus_one=abs(chrom(-1)),
        abs_linear_coefficient=abs(chrom.coeff(1)),
    )
