"""Exhaustive counting on small graphs: stable sets, cliques, induced
copies and clique selections.

These routines enumerate directly and never touch symmetric functions;
the recovery pipelines are checked against them.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations
from math import comb, prod
from typing import Mapping, Sequence

import numpy as np

from ..errors import CapabilityError
from .canon import canonical_label
from .core import ORACLE_CAP, Graph, iter_bits, popcount


def _grow(g: Graph, size: int, candidates_of) -> list[int]:
    out: list[int] = []

    def rec(mask, cand, need):
        if need == 0:
            out.append(mask)
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if popcount(cand) + 1 < need:
                return
            rec(mask | low, candidates_of(v, cand), need - 1)

    rec(0, g.vertex_mask, size)
    return out


def stable_set_masks(g: Graph, size: int) -> list[int]:
    """Bitmasks of the stable sets of ``size`` vertices, lexicographic in the vertex tuples."""
    if size < 1:
        return []
    return _grow(g, size, lambda v, cand: cand & ~g.adj[v])


def clique_masks(g: Graph, size: int) -> list[int]:
    if size < 1:
        return []
    return _grow(g, size, lambda v, cand: cand & g.adj[v])


def enumerate_stable_sets(g: Graph, size: int) -> list[tuple[int, ...]]:
    """All stable sets with ``size`` vertices, as sorted vertex tuples."""
    return [tuple(iter_bits(m)) for m in stable_set_masks(g, size)]


def enumerate_cliques(g: Graph, size: int) -> list[tuple[int, ...]]:
    return [tuple(iter_bits(m)) for m in clique_masks(g, size)]


def independence_number(g: Graph) -> int:
    k = 1
    while stable_set_masks(g, k + 1):
        k += 1
    return k


# induced copies ---------------------------------------------------------

@lru_cache(maxsize=None)
def _class_of_code(k: int, code: int) -> str:
    edges = []
    bit = 0
    for j in range(1, k):
        for i in range(j):
            if code >> bit & 1:
                edges.append((i, j))
            bit += 1
    return canonical_label(Graph.from_edges(k, edges))


def _subset_code(g: Graph, verts: Sequence[int]) -> int:
    code = 0
    bit = 0
    for j in range(1, len(verts)):
        aj = g.adj[verts[j]]
        for i in range(j):
            if aj >> verts[i] & 1:
                code |= 1 << bit
            bit += 1
    return code


def induced_census(g: Graph, k: int) -> Counter:
    """Map canonical id -> number of ``k``-subsets inducing that class."""
    if k > ORACLE_CAP:
        raise CapabilityError(f"induced census is capped at subgraph order {ORACLE_CAP}")
    if k > g.n:
        return Counter()
    counts: Counter = Counter()
    codes: Counter = Counter(_subset_code(g, c) for c in combinations(range(g.n), k))
    for code, c in codes.items():
        counts[_class_of_code(k, code)] += c
    return counts


def count_induced_copies(g: Graph, h: Graph) -> int:
    """Number of vertex subsets of ``g`` whose induced subgraph is isomorphic to ``h``."""
    if h.n > g.n:
        return 0
    return induced_census(g, h.n).get(canonical_label(h), 0)


# clique selections ------------------------------------------------------

class CliqueSelectionCensus:
    """Counts of clique selections of a graph, grouped by union.

    For caps ``{s: c_s}`` this tabulates, for every vertex mask ``U`` and
    every multiplicity vector ``m`` with ``m_s <= c_s``, the number of ways
    to pick ``m_s`` distinct ``s``-cliques for every ``s`` whose union is
    exactly ``U``.  Equal-size cliques form a set, not a sequence.
    """

    def __init__(self, g: Graph, caps: Mapping[int, int], allow_singletons: bool = False):
        if g.n > ORACLE_CAP:
            raise CapabilityError(f"clique selection census is capped at n={ORACLE_CAP}")
        sizes = sorted(s for s, c in caps.items() if c > 0)
        if any(s < (1 if allow_singletons else 2) for s in sizes):
            raise ValueError("clique sizes must be at least 2")
        self.graph = g
        self.sizes = tuple(sizes)
        self.caps = tuple(caps[s] for s in sizes)
        pools = [clique_masks(g, s) for s in sizes]
        bound = prod(comb(len(p), c) for p, c in zip(pools, self.caps)) if pools else 1
        dtype = np.int64 if bound < 2**62 else object
        shape = (1 << g.n,) + tuple(c + 1 for c in self.caps)
        table = np.zeros(shape, dtype=dtype)
        table[(0,) + (0,) * len(sizes)] = 1
        masks = np.arange(1 << g.n)
        for axis, (pool, cap) in enumerate(zip(pools, self.caps), start=1):
            for q in pool:
                src = [slice(None)] * table.ndim
                src[axis] = slice(0, cap)
                moved = table[tuple(src)]
                new = table.copy()
                dst = [slice(None)] * table.ndim
                dst[0] = masks | q
                dst[axis] = slice(1, cap + 1)
                # 0/1 knapsack: every clique joins the selection at most once
                np.add.at(new, tuple(dst), moved)
                table = new
        self._table = table
        by_size = np.zeros((g.n + 1,) + shape[1:], dtype=dtype)
        sizes_of = np.array([popcount(m) for m in range(1 << g.n)])
        for k in range(g.n + 1):
            by_size[k] = table[sizes_of == k].sum(axis=0)
        self._by_size = by_size

    def _index(self, spec: Mapping[int, int]):
        for s, c in spec.items():
            if c and s not in self.sizes:
                raise KeyError(f"clique size {s} not tabulated")
        idx = []
        for s, cap in zip(self.sizes, self.caps):
            c = spec.get(s, 0)
            if c > cap:
                raise KeyError(f"multiplicity {c} for size {s} exceeds cap {cap}")
            idx.append(c)
        return tuple(idx)

    def with_union(self, mask: int, spec: Mapping[int, int]) -> int:
        return int(self._table[(mask,) + self._index(spec)])

    def covering(self, spec: Mapping[int, int]) -> int:
        """Selections whose union is every vertex."""
        return self.with_union(self.graph.vertex_mask, spec)

    def covering_exactly(self, k: int, spec: Mapping[int, int]) -> int:
        """Selections whose union has exactly ``k`` vertices."""
        if not 0 <= k <= self.graph.n:
            return 0
        return int(self._by_size[(k,) + self._index(spec)])


def _spec_dict(spec) -> dict[int, int]:
    if isinstance(spec, Mapping):
        items = spec.items()
    else:
        items = spec
    out: dict[int, int] = {}
    for s, m in items:
        if s < 2:
            raise ValueError("clique sizes must be at least 2")
        if m < 0:
            raise ValueError("multiplicities must be nonnegative")
        out[s] = out.get(s, 0) + m
    return out


def count_covering_clique_selections(g: Graph, spec) -> int:
    """Ways to choose, for each ``(size, multiplicity)`` in ``spec``, that
    many distinct cliques of ``g`` so that together they cover every vertex."""
    d = _spec_dict(spec)
    if not any(d.values()):
        return 0
    return CliqueSelectionCensus(g, d).covering(d)
