"""Simple undirected graphs stored as neighbourhood bitmasks."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from ..errors import CapabilityError

#: Largest vertex count a :class:`Graph` may have.
MAX_VERTICES = 63

#: Cap for the exhaustive oracles (canonical labels, induced-copy counts).
ORACLE_CAP = 10


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """A simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitmask of neighbours of ``v``.  ``weights`` is
    ``None`` for the unweighted case, otherwise one positive integer per
    vertex.  Instances are immutable and hashable.
    """

    n: int
    adj: tuple[int, ...]
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        n = self.n
        if not 1 <= n <= MAX_VERTICES:
            raise CapabilityError(f"graphs must have 1..{MAX_VERTICES} vertices, got {n}")
        if len(self.adj) != n:
            raise ValueError("adjacency list length does not match n")
        full = (1 << n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for w in iter_bits(nb):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric at {v}-{w}")
        if self.weights is not None:
            if len(self.weights) != n:
                raise ValueError("weights length does not match n")
            if any(int(w) < 1 for w in self.weights):
                raise ValueError("vertex weights must be positive integers")
            if all(w == 1 for w in self.weights):
                object.__setattr__(self, "weights", None)

    # construction -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], weights=None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(weights) if weights is not None else None)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, n: int) -> "Graph":
        """The ``n``-vertex star: vertex 0 joined to all others."""
        return cls.from_edges(n, [(0, i) for i in range(1, n)])

    # basic queries ------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def is_weighted(self) -> bool:
        return self.weights is not None

    def weight(self, v: int) -> int:
        return 1 if self.weights is None else self.weights[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def is_stable(self, mask: int) -> bool:
        """True if no two vertices of ``mask`` are adjacent."""
        for v in iter_bits(mask):
            if self.adj[v] & mask:
                return False
        return True

    def is_clique(self, mask: int) -> bool:
        for v in iter_bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == self.vertex_mask

    def is_tree(self) -> bool:
        return self.num_edges == self.n - 1 and self.is_connected()

    # derived graphs -----------------------------------------------------

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph on ``vertices``, relabelled ``0..k-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            nb = 0
            for w in iter_bits(self.adj[v]):
                if w in index:
                    nb |= 1 << index[w]
            adj.append(nb)
        weights = None if self.weights is None else tuple(self.weights[v] for v in vertices)
        return Graph(len(vertices), tuple(adj), weights)

    def relabel(self, order: Sequence[int]) -> "Graph":
        """The graph whose vertex ``i`` is vertex ``order[i]`` of ``self``."""
        if sorted(order) != list(range(self.n)):
            raise ValueError("order must be a permutation of the vertices")
        return self.induced(order)

    def with_weights(self, weights: Sequence[int] | None) -> "Graph":
        return Graph(self.n, self.adj, None if weights is None else tuple(weights))

    def unweighted(self) -> "Graph":
        return Graph(self.n, self.adj)

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        adj = self.adj + tuple(a << shift for a in other.adj)
        if self.weights is None and other.weights is None:
            weights = None
        else:
            weights = tuple(self.weight(v) for v in range(self.n)) + tuple(
                other.weight(v) for v in range(other.n)
            )
        return Graph(self.n + other.n, adj, weights)

    def __repr__(self) -> str:
        w = "" if self.weights is None else f", weights={list(self.weights)}"
        return f"Graph(n={self.n}, edges={self.edges()}{w})"


def complement(g: Graph) -> Graph:
    """Complement graph; weights are carried over unchanged."""
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(g.adj)), g.weights)


def subsets_of_size(n: int, k: int):
    """Bitmasks of the ``k``-subsets of ``range(n)`` in lexicographic order."""
    for combo in combinations(range(n), k):
        mask = 0
        for v in combo:
            mask |= 1 << v
        yield mask
