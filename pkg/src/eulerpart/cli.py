"""Command-line interface.

Every subcommand reads the one-graph-per-file text format, speaks the
user's original vertex/edge labels, and can emit machine-readable JSON
(schema 1, polynomials as ascending coefficient arrays).  Identical input
and seed produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from eulerpart import bonds, heaps, lattice, trails, veblen
from eulerpart.errors import (
    CapExceededError,
    GraphParseError,
    InsertionError,
    NotEulerianError,
)
from eulerpart.graphs import parse_graph_file
from eulerpart.verify import VerifyConfig, run_verification_suite

SCHEMA = 1


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation: subcommand plus the shared flags."""

    command: str
    path: str | None
    output_format: str
    seed: int
    max_edges: int
    max_vertices: int

    def __post_init__(self):
        if self.max_edges <= 0 or self.max_vertices <= 0:
            raise ValueError("size caps must be positive")


def _poly(p):
    return list(p.coeffs)


def _edge_labels(g, edges):
    return [g.edge_labels[e] for e in edges]


def _blocks(g, partition):
    return [sorted(g.edge_labels[e] for e in block) for block in partition.blocks]


def _require_digraph(g):
    if not g.directed:
        raise ValueError("this subcommand needs a digraph input file")
    return g


def _require_simple(g):
    if g.directed or not g.is_simple():
        raise ValueError("this subcommand needs an undirected simple graph file")
    return g


def _resolve_vertex(g, token):
    try:
        return g.vertex_labels.index(token)
    except ValueError:
        raise ValueError(f"unknown vertex label {token!r}") from None


def _resolve_order(g, listing):
    if listing is None:
        return tuple(g.edges())
    labels = [part.strip() for part in listing.split(",") if part.strip()]
    index = {label: e for e, label in enumerate(g.edge_labels)}
    try:
        order = tuple(index[label] for label in labels)
    except KeyError as err:
        raise ValueError(f"unknown edge label {err.args[0]!r}") from None
    if sorted(order) != sorted(g.edges()):
        raise ValueError("--order must list every edge label exactly once")
    return order


# -- subcommand bodies: each returns a JSON-able payload ----------------------


def cmd_circuits(args, g):
    circuits = trails.eulerian_circuits(g)
    return {
        "count": len(circuits),
        "circuits": [_edge_labels(g, c.edges) for c in circuits],
    }


def cmd_martin(args, g):
    _require_digraph(g)
    polys = lattice.martin_polynomial(g)
    return {
        "f": list(polys.f),
        "r": _poly(polys.r),
        "s": _poly(polys.s),
        "s_text": str(polys.s),
    }


def cmd_cancellation(args, g):
    _require_digraph(g)
    report = lattice.verify_cancellation(g)
    return {
        "f": list(report.f),
        "alternating_sum": report.alternating_sum,
        "is_single_cycle": report.is_single_cycle,
        "holds": report.holds,
    }


def cmd_identity(args, g):
    _require_digraph(g)
    report = lattice.martin_chromatic_identity(g)
    return {
        "s": _poly(report.s),
        "lhs": _poly(report.lhs),
        "rhs": _poly(report.rhs),
        "per_partition": [
            {"cycles": _blocks(g, a), "chi": _poly(chi)}
            for a, chi in report.chi_by_partition
        ],
        "holds": report.holds,
        "r_identity_holds": report.r_identity_holds,
    }


def cmd_lattice_dump(args, g):
    _require_digraph(g)
    lat = lattice.build_eulerian_semilattice(g)
    elements = []
    for b in lat.elements:
        elements.append(
            {
                "blocks": _blocks(g, b),
                "signed_circuits": lat.signed_product(b),
                "downset_sum": lat.downset_sum(b),
            }
        )
    return {
        "size": len(lat),
        "elements": elements,
        "minimal": [lat.elements.index(a) for a in lat.minimal],
        "top": lat.elements.index(lat.top),
    }


def cmd_nbc(args, g):
    _require_simple(g)
    order = _resolve_order(g, args.order)
    sink = _resolve_vertex(g, args.sink) if args.sink else 0
    bases = bonds.nbc_bases(g, order)
    rows = []
    for base in bases:
        o = bonds.base_to_orientation_direct(base, g, sink, order)
        rows.append(
            {
                "edges": sorted(_edge_labels(g, sorted(base))),
                "orientation": [
                    [g.vertex_labels[u], g.vertex_labels[v]] for u, v in o.arcs
                ],
            }
        )
    return {
        "order": _edge_labels(g, order),
        "sink": g.vertex_labels[sink],
        "count": len(bases),
        "bases": rows,
    }


def cmd_bijection_check(args, g):
    _require_simple(g)
    rng = random.Random(args.seed)
    orders = [tuple(g.edges())]
    base = list(g.edges())
    for _ in range(2):
        rng.shuffle(base)
        orders.append(tuple(base))
    acyclic = bonds.acyclic_orientations(g)
    by_sink = {}
    for o in acyclic:
        s = bonds.sinks(o)
        if len(s) == 1:
            by_sink.setdefault(s[0], []).append(o)
    failures = []
    n_bases = None
    for order in orders:
        bases = bonds.nbc_bases(g, order)
        n_bases = len(bases)
        for x in range(g.n):
            usos = by_sink.get(x, [])
            if len(usos) != len(bases):
                failures.append(f"count mismatch at sink {g.vertex_labels[x]}")
            for t in bases:
                mu_o = bonds.base_to_orientation_direct(t, g, x, order)
                phi_o = bonds.base_to_orientation_recursive(t, g, x, order)
                if mu_o.arcs != phi_o.arcs:
                    failures.append("explicit and recursive maps disagree")
                if bonds.orientation_to_base(phi_o, g, x, order) != t:
                    failures.append("inverse map failed on a base")
            for o in usos:
                t = bonds.orientation_to_base(o, g, x, order)
                if bonds.base_to_orientation_recursive(t, g, x, order).arcs != o.arcs:
                    failures.append("inverse map failed on an orientation")
    return {
        "seed": args.seed,
        "orders": len(orders),
        "nbc_bases": n_bases,
        "ok": not failures,
        "failures": sorted(set(failures)),
    }


def cmd_chromatic(args, g):
    _require_simple(g)
    p = bonds.chromatic_polynomial(g)
    whitney = bonds.chromatic_polynomial_whitney(g)
    return {
        "chromatic": _poly(p),
        "chromatic_text": str(p),
        "routes_agree": p == whitney,
    }


def cmd_pyramids(args, g):
    _require_simple(g)
    ps = heaps.PieceSystem(g)
    piece = _resolve_vertex(g, args.piece) if args.piece else 0
    pyramids = heaps.full_pyramids(ps, piece)
    rows = []
    for pyr in pyramids:
        rows.append(
            {
                "elements": [g.vertex_labels[x] for x in pyr.elements],
                "covers": [
                    [g.vertex_labels[a], g.vertex_labels[b]] for a, b in pyr.covers()
                ],
                "labels": {
                    g.vertex_labels[x]: g.vertex_labels[pyr.labels[x]]
                    for x in pyr.elements
                },
            }
        )
    return {"piece": g.vertex_labels[piece], "count": len(pyramids), "pyramids": rows}


def cmd_charpoly(args, g):
    _require_simple(g)
    method = args.method or "all"
    out = {"method": method}
    values = {}
    if method in ("det", "all"):
        values["det"] = veblen.charpoly_determinant_oracle(g)
    if method in ("hs", "all"):
        values["hs"] = veblen.hs_characteristic_polynomial(g)
    if method in ("elementary", "all"):
        values["elementary"] = veblen.elementary_subgraph_formula(g)
    for name, poly in values.items():
        out[name] = _poly(poly)
    out["text"] = str(next(iter(values.values())))
    if len(values) > 1:
        out["agree"] = len({tuple(p.coeffs) for p in values.values()}) == 1
    return out


def cmd_weight(args, g):
    if g.directed:
        raise ValueError("weights need an undirected multigraph file")
    if not veblen.is_veblen(g):
        raise ValueError("weights need every vertex degree even")
    x = veblen.VeblenMultigraph.from_multigraph(g)
    value = veblen.weight(x, args.n)
    return {
        "n": args.n,
        "weight": str(value),
        "weight_fraction": [value.numerator, value.denominator],
        "connected": x.edge_support_connected(),
        "decomposable": (
            veblen.is_decomposable(x) if x.edge_support_connected() else None
        ),
    }


def cmd_verify(args, _g=None):
    config = VerifyConfig(
        max_edges=args.max_edges,
        max_vertices=args.max_vertices,
        oracle_edges=10 if args.max_edges >= 8 else args.max_edges,
        seed=args.seed,
    )
    status, report = run_verification_suite(config)
    return report, status


def _render_text(payload, out):
    """Stable plain-text rendering: sorted keys, one line per scalar."""

    def walk(prefix, value):
        if isinstance(value, dict):
            for key in sorted(value):
                walk(f"{prefix}{key}.", value[key])
        elif isinstance(value, list):
            out.write(f"{prefix[:-1]} = {json.dumps(value, sort_keys=True)}\n")
        else:
            out.write(f"{prefix[:-1]} = {value}\n")

    walk("", payload)


COMMANDS = {
    "circuits": (cmd_circuits, True),
    "martin": (cmd_martin, True),
    "cancellation": (cmd_cancellation, True),
    "identity": (cmd_identity, True),
    "lattice-dump": (cmd_lattice_dump, True),
    "nbc": (cmd_nbc, True),
    "bijection-check": (cmd_bijection_check, True),
    "chromatic": (cmd_chromatic, True),
    "pyramids": (cmd_pyramids, True),
    "charpoly": (cmd_charpoly, True),
    "weight": (cmd_weight, True),
    "verify": (cmd_verify, False),
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="eulerpart",
        description="Exact circuit-partition invariants of Eulerian digraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, needs_file) in COMMANDS.items():
        p = sub.add_parser(name)
        if needs_file:
            p.add_argument("file", help="graph file (text format)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--max-edges", type=int, default=8)
        p.add_argument("--max-vertices", type=int, default=6)
        if name == "nbc":
            p.add_argument("--order", help="comma-separated edge labels")
            p.add_argument("--sink", help="vertex label")
        if name == "pyramids":
            p.add_argument("--piece", help="vertex label of the maximal piece")
        if name == "charpoly":
            p.add_argument(
                "--method", choices=("hs", "elementary", "det", "all"), default="all"
            )
        if name == "weight":
            p.add_argument("-n", type=int, default=0)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handler, needs_file = COMMANDS[args.command]
    try:
        RunConfig(
            command=args.command,
            path=getattr(args, "file", None),
            output_format=args.format,
            seed=args.seed,
            max_edges=args.max_edges,
            max_vertices=args.max_vertices,
        )
        if needs_file:
            graph = parse_graph_file(args.file)
            payload = handler(args, graph)
            status = 0
        else:
            payload, status = handler(args)
    except (
        GraphParseError,
        NotEulerianError,
        CapExceededError,
        InsertionError,
        ValueError,
        OSError,
    ) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    envelope = {"schema": SCHEMA, "command": args.command, "seed": args.seed}
    if needs_file:
        envelope["input"] = args.file
    envelope["result"] = payload
    if args.format == "json":
        print(json.dumps(envelope, sort_keys=True, indent=2))
    else:
        _render_text(envelope, sys.stdout)
    return status


if __name__ == "__main__":
    sys.exit(main())
