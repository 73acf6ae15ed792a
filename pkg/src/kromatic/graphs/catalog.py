"""Catalogs of nonisomorphic graphs and the human-readable alias table."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from ..errors import CapabilityError, KromaticError
from .canon import canonical_form, canonical_label
from .core import Graph, complement
from .io import parse_graph6

#: Largest order :func:`generate_nonisomorphic` will build.
GENERATION_CAP = 7

# Aliases are display names only; identity is always the canonical id.
# Each entry is (order, edge list).
_ALIAS_EDGES: dict[str, tuple[int, list[tuple[int, int]]]] = {
    "K1": (1, []),
    "2v": (2, []),
    "e": (2, [(0, 1)]),
    "3v": (3, []),
    "e+v": (3, [(0, 1)]),
    "P3": (3, [(0, 1), (1, 2)]),
    "K3": (3, [(0, 1), (1, 2), (0, 2)]),
    "4v": (4, []),
    "e+2v": (4, [(0, 1)]),
    "2e": (4, [(0, 1), (2, 3)]),
    "P3+v": (4, [(0, 1), (1, 2)]),
    "K3+v": (4, [(0, 1), (1, 2), (0, 2)]),
    "claw": (4, [(0, 1), (0, 2), (0, 3)]),
    "P4": (4, [(0, 1), (1, 2), (2, 3)]),
    "paw": (4, [(0, 1), (1, 2), (0, 2), (2, 3)]),
    "C4": (4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    "K4-e": (4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    "K4": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    "5v": (5, []),
    "e+3v": (5, [(0, 1)]),
    "2e+v": (5, [(0, 1), (2, 3)]),
    "P3+2v": (5, [(0, 1), (1, 2)]),
    "K3+2v": (5, [(0, 1), (1, 2), (0, 2)]),
    "P4+v": (5, [(0, 1), (1, 2), (2, 3)]),
    "claw+v": (5, [(0, 1), (0, 2), (0, 3)]),
    "P3+e": (5, [(0, 1), (1, 2), (3, 4)]),
    "C4+v": (5, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    "paw+v": (5, [(0, 1), (1, 2), (0, 2), (2, 3)]),
    "K14": (5, [(0, 1), (0, 2), (0, 3), (0, 4)]),
    "chair": (5, [(0, 1), (0, 2), (0, 3), (3, 4)]),
    "P5": (5, [(0, 1), (1, 2), (2, 3), (3, 4)]),
    "K3+e": (5, [(0, 1), (1, 2), (0, 2), (3, 4)]),
    "K4-e+v": (5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    "cricket": (5, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)]),
    "bull": (5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)]),
    "banner": (5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]),
    "tadpole": (5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]),
    "C5": (5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
    "K4+v": (5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    "dart": (5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (1, 4)]),
    "kite": (5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4)]),
    "butterfly": (5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]),
    "K23": (5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
    "house": (5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)]),
    "K4+e": (5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)]),
    "K4-e+P3": (5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
    "fan": (5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]),
    "co-(P3+e)": (5, [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)]),
    "K4+P3": (5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)]),
    "W4": (5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)]),
    "K5-e": (5, [(a, b) for a in range(5) for b in range(a + 1, 5) if (a, b) != (3, 4)]),
    "K5": (5, [(a, b) for a in range(5) for b in range(a + 1, 5)]),
}

# Secondary names used in the literature for some of the graphs above.
_EXTRA_NAMES = {
    "K3+e+v": "paw+v",
    "K3+e_5": "K3+e",
    "diamond": "K4-e",
    "K13": "claw",
    "K1,4": "K14",
    "flag": "banner",
    "gem": "fan",
    "K2,3": "K23",
}


def alias_graph(name: str) -> Graph:
    """The graph named ``name`` in the alias table."""
    name = _EXTRA_NAMES.get(name, name)
    try:
        n, edges = _ALIAS_EDGES[name]
    except KeyError:
        raise KeyError(f"unknown graph alias {name!r}") from None
    return Graph.from_edges(n, edges)


@lru_cache(maxsize=None)
def _aliases_by_id() -> dict[str, tuple[str, ...]]:
    out: dict[str, list[str]] = {}
    for name in _ALIAS_EDGES:
        out.setdefault(canonical_label(alias_graph(name)), []).append(name)
    for extra, base in _EXTRA_NAMES.items():
        out[canonical_label(alias_graph(base))].append(extra)
    return {k: tuple(v) for k, v in out.items()}


def aliases_of(graph_id: str) -> tuple[str, ...]:
    return _aliases_by_id().get(graph_id, ())


def graph_id(g: Graph) -> str:
    return canonical_label(g)


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    graph: Graph
    aliases: tuple[str, ...] = ()

    @property
    def name(self) -> str:
        return self.aliases[0] if self.aliases else self.id


@dataclass(frozen=True)
class GraphCatalog:
    """Ordered list of pairwise nonisomorphic graphs keyed by canonical id."""

    entries: tuple[CatalogEntry, ...]
    _index: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        index = {}
        for i, e in enumerate(self.entries):
            if e.id in index:
                raise KromaticError(f"duplicate catalog id {e.id}")
            index[e.id] = i
        self._index.update(index)

    @classmethod
    def from_graphs(cls, graphs) -> "GraphCatalog":
        """Catalog of the distinct isomorphism classes among ``graphs``
        (first occurrence kept, then sorted by edge count and id)."""
        seen: dict[str, Graph] = {}
        for g in graphs:
            gid = canonical_label(g)
            if gid not in seen:
                seen[gid] = canonical_form(g)
        ordered = sorted(seen.items(), key=lambda kv: (kv[1].num_edges, kv[0]))
        return cls(tuple(CatalogEntry(gid, g, aliases_of(gid)) for gid, g in ordered))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> CatalogEntry:
        return self.entries[i]

    def __contains__(self, graph_id: str) -> bool:
        return graph_id in self._index

    @property
    def ids(self) -> list[str]:
        return [e.id for e in self.entries]

    def index(self, graph_id: str) -> int:
        return self._index[graph_id]

    def entry(self, key) -> CatalogEntry:
        """Look up by canonical id, alias or :class:`Graph`."""
        if isinstance(key, Graph):
            key = canonical_label(key)
        elif key not in self._index:
            key = canonical_label(alias_graph(key))
        return self.entries[self._index[key]]

    def id_of(self, key) -> str:
        return self.entry(key).id

    def name(self, graph_id: str) -> str:
        return self.entries[self._index[graph_id]].name

    def complement_ids(self) -> dict[str, str]:
        """Map each id to the id of the complementary graph (which must be present)."""
        return {e.id: canonical_label(complement(e.graph)) for e in self.entries}


def _augment(previous: GraphCatalog, n: int):
    for e in previous:
        g = e.graph
        for nb in range(1 << (n - 1)):
            adj = list(g.adj) + [nb]
            for w in range(n - 1):
                if nb >> w & 1:
                    adj[w] |= 1 << (n - 1)
            yield Graph(n, tuple(adj))


@lru_cache(maxsize=None)
def generate_nonisomorphic(n: int) -> GraphCatalog:
    """One representative of every isomorphism class on ``n`` vertices.

    Built by adding a vertex with every possible neighbourhood to each
    graph of order ``n - 1`` and deduplicating by canonical id; every
    graph arises this way because deleting any vertex leaves a graph
    isomorphic to a catalog member.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > GENERATION_CAP:
        raise CapabilityError(
            f"exhaustive generation is capped at n={GENERATION_CAP}; load larger catalogs from graph6"
        )
    if n == 1:
        return GraphCatalog.from_graphs([Graph.empty(1)])
    return GraphCatalog.from_graphs(_augment(generate_nonisomorphic(n - 1), n))


def generate_by_filter(n: int) -> GraphCatalog:
    """Slow reference generator: canonicalise every labelled graph on ``n`` vertices."""
    if n > 6:
        raise CapabilityError("the labelled-graph filter is only practical for n <= 6")
    pairs = [(i, j) for j in range(1, n) for i in range(j)]

    def labelled():
        for bits in range(1 << len(pairs)):
            yield Graph.from_edges(n, [p for k, p in enumerate(pairs) if bits >> k & 1])

    return GraphCatalog.from_graphs(labelled())


def load_catalog(lines) -> GraphCatalog:
    """Catalog from graph6 lines (duplicates up to isomorphism collapse)."""
    return GraphCatalog.from_graphs(
        parse_graph6(s) for s in (l.strip() for l in lines) if s and not s.startswith("#")
    )
