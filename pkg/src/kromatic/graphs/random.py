"""Seeded random graphs and trees.

Both generators draw only from a :class:`random.Random` instance, so a
fixed seed reproduces the same graphs on every platform.
"""
from __future__ import annotations

import random as _random

from .core import Graph


def random_graph(n: int, rng: _random.Random, p: float = 0.5) -> Graph:
    """Erdos-Renyi G(n, p): pairs visited in lexicographic order, one draw each."""
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_tree(n: int, rng: _random.Random) -> Graph:
    """Uniform labelled tree on ``n`` vertices via a random Pruefer sequence."""
    if n == 1:
        return Graph.empty(1)
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def seeded_graphs(count: int, n: int, seed: int = 0, p: float = 0.5) -> list[Graph]:
    rng = _random.Random(seed)
    return [random_graph(n, rng, p) for _ in range(count)]


def seeded_trees(count: int, n_min: int, n_max: int, seed: int = 0) -> list[Graph]:
    """``count`` trees with orders drawn uniformly from ``n_min..n_max``."""
    rng = _random.Random(seed)
    return [random_tree(rng.randint(n_min, n_max), rng) for _ in range(count)]
