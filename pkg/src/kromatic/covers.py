"""Cover counts of the complement read off an augmented-monomial vector.

``#(i1; i2, i3, ...)`` is the number of ways to pick ``i_j`` distinct
``j``-cliques of the complement (for each ``j >= 2``) whose union is a set
of exactly ``i1`` vertices.  Stable sets of ``G`` are cliques of the
complement, so the coefficient of the partition with ``i_j`` parts equal
to ``j`` and ``n - i1`` ones counts such selections together with
``n - i1`` distinct singletons covering the rest.  A selection covering
exactly ``k >= i1`` vertices extends in ``C(k, i1)`` ways, giving::

    coeff(... 1^(n-i1)) = sum over k >= i1 of #(k; ...) * C(k, i1)

which is solved for ``#(i1; ...)`` from ``k = n`` downwards.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Mapping

from .algebra import Partition
from .engine import MBarVector
from .errors import MalformedInvariantError
from .graphs import CliqueSelectionCensus, Graph, complement


@dataclass(frozen=True)
class CoverSpec:
    """Exactly ``i1`` vertices covered by ``multiplicities[j]`` distinct ``j``-cliques.

    ``multiplicities`` is normalised to sorted ``(size, count)`` pairs with
    zero counts dropped, so specs compare and hash by value.
    """

    i1: int
    multiplicities: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        raw = self.multiplicities
        items = raw.items() if isinstance(raw, Mapping) else raw
        merged: dict[int, int] = {}
        for size, count in items:
            if size < 2:
                raise ValueError("clique sizes must be at least 2")
            if count < 0:
                raise ValueError("multiplicities must be nonnegative")
            merged[size] = merged.get(size, 0) + count
        if self.i1 < 0:
            raise ValueError("i1 must be nonnegative")
        object.__setattr__(self, "multiplicities", tuple(sorted((s, c) for s, c in merged.items() if c)))

    @classmethod
    def of(cls, i1: int, **counts: int) -> "CoverSpec":
        """``CoverSpec.of(4, i2=5)`` style constructor."""
        mult = {}
        for key, c in counts.items():
            if not key.startswith("i") or not key[1:].isdigit():
                raise TypeError(f"unexpected keyword {key!r}")
            mult[int(key[1:])] = c
        return cls(i1, tuple(mult.items()))

    @classmethod
    def parse(cls, text: str) -> "CoverSpec":
        """Inverse of :meth:`__str__`, e.g. ``"i1=4,i2=5"``."""
        fields = dict(part.split("=") for part in text.replace(" ", "").split(",") if part)
        return cls.of(**{k: int(v) for k, v in fields.items()}) if "i1" in fields else cls.of(0, **fields)

    @property
    def as_dict(self) -> dict[int, int]:
        return dict(self.multiplicities)

    @property
    def is_empty(self) -> bool:
        return not self.multiplicities

    def slots(self) -> int:
        """Upper bound on the number of vertices the cliques can cover."""
        return sum(s * c for s, c in self.multiplicities)

    def __str__(self):
        return ",".join([f"i1={self.i1}"] + [f"i{s}={c}" for s, c in self.multiplicities])


def _spec(spec) -> CoverSpec:
    return spec if isinstance(spec, CoverSpec) else CoverSpec(*spec)


def vertex_count(v: MBarVector) -> int:
    """The unique ``k`` with coefficient 1 at ``1^k``; all other ``1^k`` vanish."""
    bound = v.multiplicity_bounds[0] if v.multiplicity_bounds else 0
    values = {k: v[(1,) * k] for k in range(bound + 1)}
    hits = [k for k, c in values.items() if c]
    if len(hits) != 1 or values[hits[0]] != 1:
        raise MalformedInvariantError(
            f"coefficients at 1^k must be 1 for exactly one k and 0 otherwise, got {values}"
        )
    return hits[0]


def cover_count(v: MBarVector, spec) -> int:
    """``#(i1; multiplicities)`` for the complement of the graph behind ``v``."""
    spec = _spec(spec)
    n = vertex_count(v)
    if spec.i1 > n:
        raise ValueError(f"cannot cover {spec.i1} vertices of a {n}-vertex graph")
    memo = v.cover_memo
    mult = spec.multiplicities
    base = Partition.from_multiplicities(dict(mult))
    # fill from i1 = n downwards so every call only reads finished entries
    for i1 in range(n, spec.i1 - 1, -1):
        key = (i1, mult)
        if key in memo:
            continue
        value = v[Partition(base + (1,) * (n - i1))]
        for k in range(i1 + 1, n + 1):
            value -= memo[(k, mult)] * comb(k, i1)
        memo[key] = value
    return memo[(spec.i1, mult)]


def cover_count_oracle(g: Graph, spec) -> int:
    """Same quantity as :func:`cover_count`, by direct knapsack over the
    cliques of ``complement(g)``."""
    spec = _spec(spec)
    if spec.i1 > g.n:
        raise ValueError(f"cannot cover {spec.i1} vertices of a {g.n}-vertex graph")
    census = CliqueSelectionCensus(complement(g), spec.as_dict)
    return census.covering_exactly(spec.i1, spec.as_dict)


class CoverOracle:
    """Oracle answers for many specs on one graph from a single census."""

    def __init__(self, g: Graph, caps: Mapping[int, int]):
        self.graph = g
        self._census = CliqueSelectionCensus(complement(g), caps)

    def __call__(self, spec) -> int:
        spec = _spec(spec)
        return self._census.covering_exactly(spec.i1, spec.as_dict)
