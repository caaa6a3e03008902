"""Multigraphs, digraphs, orientations and vertex-fixing equivalence.

Vertices and edges are dense nonnegative integers; original file labels are
kept in side tables so CLI output can speak the user's names.  Parallel edges
are first-class (distinct ids, same endpoints); loops are rejected at
construction time.
"""

from __future__ import annotations

from dataclasses import dataclass

from eulerpart.errors import GraphParseError


class Multigraph:
    """Undirected multigraph: edge i joins the unordered pair ``pairs[i]``.

    >>> g = Multigraph(2, [(0, 1), (0, 1)])
    >>> g.multiplicity(0, 1)
    2
    >>> g.degree(0)
    2
    """

    directed = False

    def __init__(self, n, pairs, vertex_labels=None, edge_labels=None):
        pairs = [tuple(p) for p in pairs]
        for u, v in pairs:
            if u == v:
                raise ValueError(f"loop edge at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge endpoint out of range: ({u}, {v})")
        self.n = n
        self.pairs = tuple(frozenset(p) for p in pairs)
        self.vertex_labels = tuple(vertex_labels) if vertex_labels else tuple(
            str(i) for i in range(n)
        )
        self.edge_labels = tuple(edge_labels) if edge_labels else tuple(
            f"e{i}" for i in range(len(pairs))
        )
        if len(self.vertex_labels) != n or len(self.edge_labels) != len(pairs):
            raise ValueError("label tables must match vertex/edge counts")
        self._adj = [[] for _ in range(n)]
        for e, pair in enumerate(self.pairs):
            u, v = sorted(pair)
            self._adj[u].append((e, v))
            self._adj[v].append((e, u))
        for lst in self._adj:
            lst.sort()

    @property
    def m(self):
        return len(self.pairs)

    def edges(self):
        return range(len(self.pairs))

    def vertices(self):
        return range(self.n)

    def endpoints(self, e):
        return self.pairs[e]

    def incident(self, u):
        """Sorted list of (edge id, other endpoint)."""
        return self._adj[u]

    def degree(self, u):
        self._check_vertex(u)
        return len(self._adj[u])

    def multiplicity(self, u, v):
        pair = frozenset((u, v))
        return sum(1 for p in self.pairs if p == pair)

    def multiplicity_of_edge(self, e):
        return sum(1 for p in self.pairs if p == self.pairs[e])

    def is_simple(self):
        return len(set(self.pairs)) == len(self.pairs)

    def neighbors(self, u):
        return sorted({v for _, v in self._adj[u]})

    def support_vertices(self, edge_subset=None):
        edges = self.edges() if edge_subset is None else edge_subset
        out = set()
        for e in edges:
            out |= self.pairs[e]
        return out

    def edge_support_connected(self, edge_subset=None):
        """Connectivity of the sub(multi)graph on the given edges, ignoring
        isolated vertices; the empty edge set is not connected."""
        edges = set(self.edges() if edge_subset is None else edge_subset)
        if not edges:
            return False
        by_vertex = {}
        for e in edges:
            for v in self.pairs[e]:
                by_vertex.setdefault(v, []).append(e)
        start = next(iter(by_vertex))
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for e in by_vertex[u]:
                for v in self.pairs[e]:
                    if v not in seen:
                        seen.add(v)
                        stack.append(v)
        return seen == set(by_vertex)

    def restrict(self, edge_subset):
        """Sub-multigraph on an edge subset; vertex ids are preserved."""
        edge_subset = sorted(edge_subset)
        return Multigraph(
            self.n,
            [tuple(sorted(self.pairs[e])) for e in edge_subset],
            self.vertex_labels,
            [self.edge_labels[e] for e in edge_subset],
        )

    def components(self):
        """Vertex sets of connected components of the edge support."""
        remaining = set(self.support_vertices())
        out = []
        while remaining:
            start = min(remaining)
            seen = {start}
            stack = [start]
            while stack:
                u = stack.pop()
                for _, v in self._adj[u]:
                    if v not in seen:
                        seen.add(v)
                        stack.append(v)
            out.append(frozenset(seen))
            remaining -= seen
        return out

    def _check_vertex(self, u):
        if not (0 <= u < self.n):
            raise ValueError(f"unknown vertex {u}")

    def __repr__(self):
        inner = ", ".join("{%d,%d}" % tuple(sorted(p)) for p in self.pairs)
        return f"Multigraph(n={self.n}, [{inner}])"


class Digraph:
    """Directed multigraph: edge i is the ordered arc ``arcs[i]`` = (tail, head)."""

    directed = True

    def __init__(self, n, arcs, vertex_labels=None, edge_labels=None):
        arcs = [tuple(a) for a in arcs]
        for u, v in arcs:
            if u == v:
                raise ValueError(f"loop arc at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc endpoint out of range: ({u}, {v})")
        self.n = n
        self.arcs = tuple(arcs)
        self.vertex_labels = tuple(vertex_labels) if vertex_labels else tuple(
            str(i) for i in range(n)
        )
        self.edge_labels = tuple(edge_labels) if edge_labels else tuple(
            f"e{i}" for i in range(len(arcs))
        )
        if len(self.vertex_labels) != n or len(self.edge_labels) != len(arcs):
            raise ValueError("label tables must match vertex/edge counts")
        self._out = [[] for _ in range(n)]
        self._in = [[] for _ in range(n)]
        for e, (u, v) in enumerate(self.arcs):
            self._out[u].append((e, v))
            self._in[v].append((e, u))
        for lst in self._out:
            lst.sort()
        for lst in self._in:
            lst.sort()

    @property
    def m(self):
        return len(self.arcs)

    def edges(self):
        return range(len(self.arcs))

    def vertices(self):
        return range(self.n)

    def arc(self, e):
        return self.arcs[e]

    def tail(self, e):
        return self.arcs[e][0]

    def head(self, e):
        return self.arcs[e][1]

    def out_arcs(self, u):
        """Sorted list of (edge id, head)."""
        return self._out[u]

    def out_degree(self, u):
        self._check_vertex(u)
        return len(self._out[u])

    def in_degree(self, u):
        self._check_vertex(u)
        return len(self._in[u])

    def degree(self, u):
        return self.out_degree(u) + self.in_degree(u)

    def multiplicity(self, u, v):
        return sum(1 for a in self.arcs if a == (u, v))

    def support_vertices(self, edge_subset=None):
        edges = self.edges() if edge_subset is None else edge_subset
        out = set()
        for e in edges:
            out |= set(self.arcs[e])
        return out

    def edge_support_connected(self, edge_subset=None):
        """Weak connectivity of the sub-digraph on the given arcs."""
        return self.underlying_multigraph().edge_support_connected(edge_subset)

    def underlying_multigraph(self):
        return Multigraph(self.n, self.arcs, self.vertex_labels, self.edge_labels)

    def restrict(self, edge_subset):
        edge_subset = sorted(edge_subset)
        return Digraph(
            self.n,
            [self.arcs[e] for e in edge_subset],
            self.vertex_labels,
            [self.edge_labels[e] for e in edge_subset],
        )

    def is_balanced(self, edge_subset=None):
        if edge_subset is None:
            return all(self.out_degree(v) == self.in_degree(v) for v in range(self.n))
        net = {}
        for e in edge_subset:
            u, v = self.arcs[e]
            net[u] = net.get(u, 0) + 1
            net[v] = net.get(v, 0) - 1
        return all(x == 0 for x in net.values())

    def _check_vertex(self, u):
        if not (0 <= u < self.n):
            raise ValueError(f"unknown vertex {u}")

    def __repr__(self):
        inner = ", ".join("(%d,%d)" % a for a in self.arcs)
        return f"Digraph(n={self.n}, [{inner}])"


def out_degree(d, u):
    return d.out_degree(u)


def is_eulerian(d, edge_subset=None):
    """Closed-trail feasibility on a connected edge support.

    Digraphs need in-degree == out-degree everywhere; multigraphs need all
    degrees even.  The empty edge set does not count as Eulerian, and
    isolated vertices are ignored: only the edge support must be connected.
    """
    if edge_subset is None:
        edge_subset = list(d.edges())
    if not edge_subset:
        return False
    if d.directed:
        balanced = d.is_balanced(edge_subset)
    else:
        parity = {}
        for e in edge_subset:
            for v in d.pairs[e]:
                parity[v] = parity.get(v, 0) ^ 1
        balanced = not any(parity.values())
    return balanced and d.edge_support_connected(edge_subset)


def orientations(x):
    """All 2^m orientations of a multigraph, in binary-counter order.

    Bit i of the counter flips edge i away from its sorted-pair direction.
    """
    base = [tuple(sorted(p)) for p in x.pairs]
    m = len(base)
    for mask in range(1 << m):
        arcs = [
            (v, u) if mask >> e & 1 else (u, v) for e, (u, v) in enumerate(base)
        ]
        yield Digraph(x.n, arcs, x.vertex_labels, x.edge_labels)


@dataclass(frozen=True)
class ApproxClass:
    """Canonical representative of a vertex-fixing isomorphism class.

    Two (di)graphs lie in the same class iff they have the same vertex set
    and the same multiplicity map; the map is stored as a sorted tuple.
    """

    directed: bool
    n: int
    counts: tuple

    def multiplicity(self, u, v):
        key = (u, v) if self.directed else tuple(sorted((u, v)))
        for pair, count in self.counts:
            if pair == key:
                return count
        return 0


def approx_class(g):
    counts = {}
    if g.directed:
        for a in g.arcs:
            counts[a] = counts.get(a, 0) + 1
    else:
        for p in g.pairs:
            key = tuple(sorted(p))
            counts[key] = counts.get(key, 0) + 1
    return ApproxClass(g.directed, g.n, tuple(sorted(counts.items())))


def is_orientation_of(o, host):
    if o.n != host.n or o.m != host.m:
        return False
    return all(frozenset(o.arcs[e]) == host.pairs[e] for e in range(o.m))


def approx_class_size(o, host):
    """Size of the vertex-fixing class of an orientation inside its host.

    Equals M_X / K_O: the product over parallelism classes of binomial
    factors choosing which copies point each way.
    """
    if not is_orientation_of(o, host):
        raise ValueError("first argument is not an orientation of the host multigraph")
    size = 1
    for pair in set(host.pairs):
        u, v = sorted(pair)
        total = host.multiplicity(u, v)
        forward = sum(1 for a in o.arcs if a == (u, v))
        size *= _binomial(total, forward)
    return size


def _binomial(n, k):
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def parallel_factorial_product(g):
    """M_X: product of factorials of edge multiplicities over parallelism classes."""
    out = 1
    for pair in set(g.pairs):
        out *= _factorial(g.multiplicity(*sorted(pair)))
    return out


def arc_factorial_product(d):
    """K_D: product over ordered pairs of m(u, v)! for a digraph."""
    counts = {}
    for a in d.arcs:
        counts[a] = counts.get(a, 0) + 1
    out = 1
    for c in counts.values():
        out *= _factorial(c)
    return out


def out_degree_factorial_product(d):
    """N_D: product over vertices of out-degree factorials."""
    out = 1
    for v in range(d.n):
        out *= _factorial(d.out_degree(v))
    return out


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


# ---------------------------------------------------------------------------
# text format: header "digraph n" | "multigraph n", then "edge-id u v" lines
# ---------------------------------------------------------------------------


def parse_graph(text, source="<string>"):
    """Parse the one-graph-per-file text format.

    Blank lines and '#' comments are ignored.  Vertex tokens must be
    integers; they may be 0-based or 1-based, and the header count may
    exceed the number of distinct endpoints (extra vertices are isolated).
    """
    header = None
    edge_rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] not in ("digraph", "multigraph"):
                raise GraphParseError(
                    f"{source}:{lineno}: expected header 'digraph n' or 'multigraph n'"
                )
            try:
                count = int(parts[1])
            except ValueError:
                raise GraphParseError(f"{source}:{lineno}: vertex count must be an integer")
            if count <= 0:
                raise GraphParseError(f"{source}:{lineno}: vertex count must be positive")
            header = (parts[0], count)
            continue
        parts = line.split()
        if len(parts) != 3:
            raise GraphParseError(
                f"{source}:{lineno}: expected 'edge-id u v', got {line!r}"
            )
        label, u_tok, v_tok = parts
        try:
            u, v = int(u_tok), int(v_tok)
        except ValueError:
            raise GraphParseError(f"{source}:{lineno}: vertex tokens must be integers")
        if u == v:
            raise GraphParseError(f"{source}:{lineno}: loop edge {label!r} rejected")
        edge_rows.append((lineno, label, u, v))
    if header is None:
        raise GraphParseError(f"{source}: empty graph file")
    kind, n = header
    labels = [label for _, label, _, _ in edge_rows]
    if len(set(labels)) != len(labels):
        dup = next(l for l in labels if labels.count(l) > 1)
        lineno = next(ln for ln, l, _, _ in edge_rows if l == dup)
        raise GraphParseError(f"{source}:{lineno}: duplicate edge id {dup!r}")
    tokens = {u for _, _, u, v in edge_rows} | {v for _, _, u, v in edge_rows}
    zero_based = 0 in tokens
    lo = 0 if zero_based else 1
    for lineno, label, u, v in edge_rows:
        for w in (u, v):
            if not (lo <= w < lo + n):
                raise GraphParseError(
                    f"{source}:{lineno}: vertex {w} outside range "
                    f"[{lo}, {lo + n - 1}] declared by the header"
                )
    vertex_labels = [str(i + lo) for i in range(n)]
    dense = [(u - lo, v - lo) for _, _, u, v in edge_rows]
    if kind == "digraph":
        return Digraph(n, dense, vertex_labels, labels)
    return Multigraph(n, dense, vertex_labels, labels)


def parse_graph_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read(), source=str(path))


def format_graph(g):
    """Serialise back to the text format (inverse of parse up to labels)."""
    kind = "digraph" if g.directed else "multigraph"
    lines = [f"{kind} {g.n}"]
    if g.directed:
        rows = g.arcs
    else:
        rows = [tuple(sorted(p)) for p in g.pairs]
    for e, (u, v) in enumerate(rows):
        lines.append(f"{g.edge_labels[e]} {g.vertex_labels[u]} {g.vertex_labels[v]}")
    return "\n".join(lines) + "\n"
