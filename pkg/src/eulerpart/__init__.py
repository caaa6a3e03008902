"""Exact invariants of Eulerian digraphs and their circuit partitions.

Everything here is exact integer / rational arithmetic; there is no floating
point anywhere in the computational core.  The package is organised around
small immutable value types (graphs, trails, set partitions, heaps, integer
polynomials) and pure functions over them.
"""

from eulerpart.poly import IntPoly
from eulerpart.partition import SetPartition
from eulerpart.graphs import Digraph, Multigraph, parse_graph, parse_graph_file

__all__ = [
    "IntPoly",
    "SetPartition",
    "Digraph",
    "Multigraph",
    "parse_graph",
    "parse_graph_file",
]
