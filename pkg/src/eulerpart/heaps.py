"""Heaps of pieces: labeled posets whose concurrent pieces are comparable.

A piece system is a simple concurrence graph; full pyramids (bijectively
labeled heaps with one maximal element) are enumerated by a split-compose
recursion that peels off the down-set of a fixed neighbour of the apex.
That recursion is also the engine behind the trail <-> pyramid dictionary
for Eulerian digraphs.
"""

from __future__ import annotations

from itertools import combinations

from eulerpart.graphs import Digraph
from eulerpart.trails import (
    Trail,
    cycle_partitions,
    cycle_sequence,
    intersection_graph,
    insert_trail,
    edge_partition,
)


class PieceSystem:
    """Finite pieces with a reflexive symmetric concurrence relation.

    Stored as a simple graph: vertices are pieces 0..k-1, edges are the
    distinct concurrent pairs.  ``payload`` optionally attaches meaning to
    pieces (for cycle partitions: the arc set of each cycle).
    """

    def __init__(self, graph, payload=None):
        if not graph.is_simple():
            raise ValueError("a concurrence graph carries no parallel edges")
        self.graph = graph
        self.k = graph.n
        self.payload = tuple(payload) if payload is not None else None
        self._adjacent = [set() for _ in range(self.k)]
        for pair in graph.pairs:
            u, v = sorted(pair)
            self._adjacent[u].add(v)
            self._adjacent[v].add(u)

    @classmethod
    def from_cycle_partition(cls, d, a):
        """Pieces are the cycles of a partition of an Eulerian digraph's arcs;
        two cycles are concurrent when they share a vertex."""
        return cls(intersection_graph(d, a), payload=a.blocks)

    def pieces(self):
        return range(self.k)

    def concurrent(self, a, b):
        return a == b or b in self._adjacent[a]

    def neighbors(self, a):
        return sorted(self._adjacent[a])

    def connected(self, subset=None):
        subset = set(self.pieces()) if subset is None else set(subset)
        if not subset:
            return False
        start = min(subset)
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for v in self._adjacent[u]:
                if v in subset and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen == subset

    def __repr__(self):
        return f"PieceSystem(k={self.k}, pairs={sorted(tuple(sorted(p)) for p in self.graph.pairs)})"


class Heap:
    """A finite poset with piece labels, stored by its full strict order.

    ``below[x]`` is the frozenset of elements strictly below x (transitively
    closed); labels map elements to pieces and default to the identity.
    """

    __slots__ = ("elements", "below", "labels")

    def __init__(self, elements, less_pairs, labels=None):
        elements = tuple(sorted(elements))
        labels = dict(labels) if labels is not None else {x: x for x in elements}
        if set(labels) != set(elements):
            raise ValueError("labels must cover exactly the heap elements")
        below = _transitive_closure(elements, less_pairs)
        for x, bel in below.items():
            if x in bel:
                raise ValueError("order relation contains a cycle")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "below", below)
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, name, value):
        raise AttributeError("Heap is immutable")

    @staticmethod
    def empty():
        return Heap((), ())

    @staticmethod
    def singleton(x, label=None):
        return Heap((x,), (), {x: x if label is None else label})

    def __len__(self):
        return len(self.elements)

    def less(self, a, b):
        return a in self.below[b]

    def comparable(self, a, b):
        return a == b or self.less(a, b) or self.less(b, a)

    def down_set(self, x):
        return self.below[x] | {x}

    def maximal(self):
        not_max = set()
        for x in self.elements:
            not_max |= self.below[x]
        return [x for x in self.elements if x not in not_max]

    def is_pyramid(self):
        return len(self.maximal()) == 1

    def apex(self):
        tops = self.maximal()
        if len(tops) != 1:
            raise ValueError("heap has no unique maximal element")
        return tops[0]

    def covers(self):
        """Pairs (x, y) with y covering x."""
        out = []
        for y in self.elements:
            for x in self.below[y]:
                if not any(x in self.below[z] for z in self.below[y] if z != x):
                    out.append((x, y))
        return sorted(out)

    def restrict(self, subset):
        subset = frozenset(subset)
        pairs = [
            (x, y)
            for y in subset
            for x in self.below[y]
            if x in subset
        ]
        return Heap(subset, pairs, {x: self.labels[x] for x in subset})

    def canonical_linear_extension(self):
        """Smallest-available-element linear extension; deterministic."""
        taken = set()
        out = []
        remaining = set(self.elements)
        while remaining:
            choice = min(x for x in remaining if self.below[x] <= taken)
            out.append(choice)
            taken.add(choice)
            remaining.discard(choice)
        return tuple(out)

    def linear_extensions(self):
        out = []
        order = []
        remaining = set(self.elements)

        def rec():
            if not remaining:
                out.append(tuple(order))
                return
            for x in sorted(remaining):
                if self.below[x] <= set(order):
                    order.append(x)
                    remaining.discard(x)
                    rec()
                    remaining.add(x)
                    order.pop()

        rec()
        return out

    def relation(self):
        return frozenset((x, y) for y in self.elements for x in self.below[y])

    def __eq__(self, other):
        return (
            isinstance(other, Heap)
            and self.elements == other.elements
            and self.labels == other.labels
            and self.relation() == other.relation()
        )

    def __hash__(self):
        return hash((self.elements, self.relation(), tuple(sorted(self.labels.items()))))

    def __repr__(self):
        rel = sorted(self.relation())
        return f"Heap(elements={self.elements}, less={rel})"


def _transitive_closure(elements, pairs):
    below = {x: set() for x in elements}
    for a, b in pairs:
        if a not in below or b not in below:
            raise ValueError("order pair outside the element set")
        below[b].add(a)
    for k in elements:
        for y in elements:
            if k in below[y]:
                below[y] |= below[k]
    # Warshall needs a second sweep only if the element order fought the
    # topological order; iterate to a fixed point to stay safe.
    changed = True
    while changed:
        changed = False
        for y in elements:
            extra = set()
            for x in below[y]:
                extra |= below[x]
            if not extra <= below[y]:
                below[y] |= extra
                changed = True
    return {x: frozenset(s) for x, s in below.items()}


def is_heap(ps, heap):
    """Both heap axioms, with a violation witness.

    Returns (True, None) or (False, reason).  ``sandwich_check`` must agree;
    tests compare the two routes.
    """
    for x in heap.elements:
        if heap.labels[x] not in ps.pieces():
            raise ValueError(f"element {x} labeled by unknown piece {heap.labels[x]}")
    for x, y in combinations(heap.elements, 2):
        if ps.concurrent(heap.labels[x], heap.labels[y]) and not heap.comparable(x, y):
            return False, f"concurrent labels but incomparable elements {x}, {y}"
    for x, y in heap.covers():
        if not ps.concurrent(heap.labels[x], heap.labels[y]):
            return False, f"cover {x} < {y} with non-concurrent labels"
    return True, None


def sandwich_check(ps, heap):
    """Equivalent formulation: the label map must send Hasse edges into the
    concurrence graph and non-concurrent label pairs out of the
    comparability graph."""
    hasse = set(heap.covers())
    comparability = {(x, y) for x, y in combinations(heap.elements, 2) if heap.comparable(x, y)}
    for x, y in hasse:
        if not ps.concurrent(heap.labels[x], heap.labels[y]):
            return False
    for x, y in combinations(heap.elements, 2):
        if ps.concurrent(heap.labels[x], heap.labels[y]):
            if (x, y) not in comparability and (y, x) not in comparability:
                return False
    return True


def is_full(ps, heap):
    return sorted(heap.labels[x] for x in heap.elements) == list(ps.pieces())


def compose(ps, h1, h2):
    """Drop h2 on top of h1: cross pairs with concurrent labels force
    h1-element < h2-element; the result is transitively closed."""
    if set(h1.elements) & set(h2.elements):
        raise ValueError("heap composition needs disjoint element sets")
    pairs = [(x, y) for y in h1.elements for x in h1.below[y]]
    pairs += [(x, y) for y in h2.elements for x in h2.below[y]]
    for x in h1.elements:
        for y in h2.elements:
            if ps.concurrent(h1.labels[x], h2.labels[y]):
                pairs.append((x, y))
    labels = dict(h1.labels)
    labels.update(h2.labels)
    return Heap(h1.elements + h2.elements, pairs, labels)


def push_down(heap, w):
    """Split off the down-set of a maximal element: (pyramid, remainder).

    Composing the two parts back gives the original heap, and the remainder
    loses exactly w from the maximal set.
    """
    if w not in heap.maximal():
        raise ValueError(f"{w} is not a maximal element")
    down = heap.down_set(w)
    pyramid = heap.restrict(down)
    rest = heap.restrict(set(heap.elements) - down)
    return pyramid, rest


def full_pyramids(ps, beta, subset=None):
    """All full pyramids over the piece system with maximal piece beta.

    Empty when the pieces are not connected.  The recursion fixes the least
    neighbour b of the apex and splits every pyramid into (down-set of b,
    rest), both full pyramids over connected complementary piece sets.
    """
    pieces = frozenset(ps.pieces()) if subset is None else frozenset(subset)
    if beta not in pieces:
        raise ValueError(f"unknown piece {beta}")
    if not ps.connected(pieces):
        return []
    return _pyramids(ps, pieces, beta, {})


def _pyramids(ps, pieces, apex, memo):
    key = (pieces, apex)
    if key in memo:
        return memo[key]
    if len(pieces) == 1:
        result = [Heap.singleton(apex)]
        memo[key] = result
        return result
    others = pieces - {apex}
    b1 = min(p for p in others if ps.concurrent(p, apex))
    rest = sorted(others - {b1})
    result = []
    for r in range(len(rest) + 1):
        for extra in combinations(rest, r):
            part1 = frozenset((b1, *extra))
            part2 = pieces - part1
            if not ps.connected(part1) or not ps.connected(part2):
                continue
            for p1 in _pyramids(ps, part1, b1, memo):
                for p2 in _pyramids(ps, part2, apex, memo):
                    result.append(compose(ps, p1, p2))
    memo[key] = result
    return result


def count_full_pyramids(ps, beta):
    return len(full_pyramids(ps, beta))


def pyramid_split_identity(ps, b1, b2):
    """The split-sum recursion at two fixed concurrent pieces.

    Returns (lhs, rhs, per-bipartition terms): lhs counts pyramids with
    apex b2 directly, rhs sums products over admissible bipartitions.
    """
    if b1 == b2 or not ps.concurrent(b1, b2):
        raise ValueError("the identity is stated for two distinct concurrent pieces")
    if not ps.connected():
        raise ValueError("the identity needs a connected piece system")
    lhs = len(full_pyramids(ps, b2))
    pieces = frozenset(ps.pieces())
    rest = sorted(pieces - {b1, b2})
    rhs = 0
    terms = []
    for r in range(len(rest) + 1):
        for extra in combinations(rest, r):
            part1 = frozenset((b1, *extra))
            part2 = pieces - part1
            if not ps.connected(part1) or not ps.connected(part2):
                continue
            n1 = len(full_pyramids(ps, b1, part1))
            n2 = len(full_pyramids(ps, b2, part2))
            rhs += n1 * n2
            terms.append((part1, part2, n1, n2))
    return lhs, rhs, terms


# ---------------------------------------------------------------------------
# pyramids <-> unique-sink acyclic orientations of the concurrence graph
# ---------------------------------------------------------------------------


def pyramid_to_orientation(ps, pyramid):
    """Orient every concurrence edge from the lower piece to the higher one.

    Full pyramids only; the unique sink of the result is the apex.
    """
    if not is_full(ps, pyramid):
        raise ValueError("orientation conversion needs a full pyramid")
    if not pyramid.is_pyramid():
        raise ValueError("heap has more than one maximal element")
    pos = {pyramid.labels[x]: x for x in pyramid.elements}
    arcs = []
    for e in ps.graph.edges():
        u, v = sorted(ps.graph.pairs[e])
        if pyramid.less(pos[u], pos[v]):
            arcs.append((u, v))
        else:
            arcs.append((v, u))
    return Digraph(ps.k, arcs, ps.graph.vertex_labels, ps.graph.edge_labels)


def orientation_to_pyramid(ps, o):
    """Transitive closure of the arc relation tail < head.

    Needs an acyclic orientation of the concurrence graph with unique sink;
    inverse of ``pyramid_to_orientation``.
    """
    if o.n != ps.k or o.m != ps.graph.m:
        raise ValueError("not an orientation of the concurrence graph")
    for e in o.edges():
        if frozenset(o.arcs[e]) != ps.graph.pairs[e]:
            raise ValueError("not an orientation of the concurrence graph")
    sinks = [v for v in range(o.n) if o.out_degree(v) == 0]
    if len(sinks) != 1:
        raise ValueError(f"orientation has {len(sinks)} sinks; need exactly one")
    try:
        heap = Heap(range(ps.k), list(o.arcs))
    except ValueError:
        raise ValueError("orientation is cyclic") from None
    return heap


# ---------------------------------------------------------------------------
# decomposition pyramids and the trail dictionary
# ---------------------------------------------------------------------------


def decomposition_pyramids(d, e):
    """Full pyramids over each cycle partition, apex at the cycle through e.

    Returns a list of (partition, piece system, apex index, pyramids);
    summed sizes equal the number of Eulerian trails ending at e.
    """
    if e not in d.edges():
        raise ValueError(f"unknown edge {e}")
    out = []
    for a in cycle_partitions(d):
        ps = PieceSystem.from_cycle_partition(d, a)
        beta = next(i for i, block in enumerate(a.blocks) if e in block)
        out.append((a, ps, beta, full_pyramids(ps, beta)))
    return out


def trail_to_pyramid(d, w):
    """Compose singleton heaps of the trail's cycle sequence, in order."""
    cs = cycle_sequence(w)
    a = edge_partition(cs)
    ps = PieceSystem.from_cycle_partition(d, a)
    index = {block: i for i, block in enumerate(a.blocks)}
    heap = Heap.empty()
    for cyc in cs:
        heap = compose(ps, heap, Heap.singleton(index[cyc.edge_set()]))
    return a, ps, heap


def pyramid_to_trail(d, a, pyramid, e):
    """Fold a full pyramid back into the Eulerian trail ending at e.

    Reads the canonical linear extension and inserts the cycles right to
    left; the apex cycle is rotated to end with e, every other cycle is
    based at its first vertex of occurrence in the partial trail.
    """
    blocks = a.blocks
    order = pyramid.canonical_linear_extension()
    apex = pyramid.apex()
    if e not in blocks[pyramid.labels[apex]]:
        raise ValueError("the apex cycle must contain the final edge")
    assert order[-1] == apex
    trail = _cycle_trail_ending_at(d, blocks[pyramid.labels[apex]], e)
    for x in reversed(order[:-1]):
        block = blocks[pyramid.labels[x]]
        base = next(v for v in trail.vertices if v in _block_vertices(d, block))
        trail = insert_trail(_cycle_trail_from(d, block, base), trail)
    return trail


def _block_vertices(d, block):
    out = set()
    for e in block:
        out |= set(d.arcs[e])
    return out


def _successors(d, block):
    nxt = {}
    for e in block:
        u, v = d.arcs[e]
        if u in nxt:
            raise ValueError("block is not a directed cycle")
        nxt[u] = (e, v)
    return nxt


def _cycle_trail_from(d, block, base):
    """The unique traversal of a directed-cycle block starting at base."""
    nxt = _successors(d, block)
    verts = [base]
    edges = []
    cur = base
    for _ in range(len(block)):
        e, cur = nxt[cur]
        edges.append(e)
        verts.append(cur)
    return Trail(d, verts, edges)


def _cycle_trail_ending_at(d, block, e):
    """The unique traversal of a directed-cycle block whose last arc is e."""
    head = d.arcs[e][1]
    return _cycle_trail_from(d, block, head)


def trail_pyramid_round_trip(d, w, e):
    a, _, pyramid = trail_to_pyramid(d, w)
    return pyramid_to_trail(d, a, pyramid, e)
