"""Canonical labelling by individualisation-refinement.

The search refines an ordered vertex partition to an equitable one,
branches on the first non-singleton cell, and keeps the leaf whose
relabelled adjacency code is largest.  Transpositions of twin vertices
are automorphisms fixing the current partition, so only one vertex per
twin class is tried in each cell.  Exhaustive below :data:`ORACLE_CAP`.
"""
from __future__ import annotations

from functools import lru_cache

from ..errors import CapabilityError
from .core import ORACLE_CAP, Graph, popcount
from .io import to_graph6


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple(popcount(g.adj[v] & m) for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(cell)
                continue
            changed = True
            for k in keys:
                out.append([v for v in cell if sig[v] == k])
        cells = out
        if not changed:
            return cells


def _code(g: Graph, order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        aj = g.adj[order[j]]
        for i in range(j):
            code = code << 1 | (aj >> order[i] & 1)
    return code


def _twins(g: Graph, u: int, v: int) -> bool:
    mu = g.adj[u] & ~(1 << v)
    mv = g.adj[v] & ~(1 << u)
    return mu == mv


def canonical_order(g: Graph) -> list[int]:
    """Vertex order under which ``g`` attains its canonical form."""
    if g.n > ORACLE_CAP:
        raise CapabilityError(f"canonical labelling is capped at n={ORACLE_CAP}, got n={g.n}")
    best_code = -1
    best_order: list[int] = []

    def search(cells):
        nonlocal best_code, best_order
        cells = _refine(g, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(g, order)
            if code > best_code:
                best_code, best_order = code, order
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(_twins(g, u, v) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(range(g.n))])
    return best_order


@lru_cache(maxsize=1 << 16)
def _canonical(g: Graph) -> Graph:
    return g.relabel(canonical_order(g))


def canonical_form(g: Graph) -> Graph:
    """The canonical representative of ``g``'s isomorphism class (weights dropped)."""
    return _canonical(g.unweighted())


def canonical_label(g: Graph) -> str:
    """graph6 string of :func:`canonical_form`; equal iff isomorphic."""
    return to_graph6(canonical_form(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges == h.num_edges and canonical_label(g) == canonical_label(h)
