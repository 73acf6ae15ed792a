"""Counts on at most three vertices."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from ..covers import CoverSpec, cover_count, vertex_count
from ..engine import MBarVector


@dataclass(frozen=True)
class SmallCounts:
    """Vertices, edges and the four induced 3-vertex classes of ``G``."""

    vertices: int
    edges: int
    triangles: int
    induced_p3: int
    edge_plus_vertex: int
    empty_triples: int


def order_leq3_counts(v: MBarVector) -> SmallCounts:
    n = vertex_count(v)

    def cc(i1, **kw):
        return cover_count(v, CoverSpec.of(i1, **kw)) if i1 <= n else 0

    # complement side first
    co_edges = cc(2, i2=1)
    co_triangles = cc(3, i3=1)
    co_p3 = cc(3, i2=2) - 3 * co_triangles
    # each edge with a third vertex spans a triangle (3 ways), a P3 (2 ways) or e+v
    co_edge_vertex = co_edges * max(n - 2, 0) - 2 * co_p3 - 3 * co_triangles
    co_empty = comb(n, 3) - co_triangles - co_p3 - co_edge_vertex
    return SmallCounts(
        vertices=n,
        edges=comb(n, 2) - co_edges,
        triangles=co_empty,
        induced_p3=co_edge_vertex,
        edge_plus_vertex=co_p3,
        empty_triples=co_triangles,
    )
