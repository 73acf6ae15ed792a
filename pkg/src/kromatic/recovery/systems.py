"""Linear systems for the induced-subgraph counts of the complement.

For each order ``k`` the unknowns are the induced counts in the
complement of every graph of the order-``k`` catalog.  Three kinds of
equations are available, all with coefficients independent of ``n``:

* the sum of all unknowns is ``C(n, k)``;
* lifts: any valid relation ``sum_L a_L #L = b`` among order ``k - 1``
  counts gives ``sum_H (sum_L a_L c(L, H)) #H = (n - k + 1) b``, where
  ``c(L, H)`` is the number of induced copies of ``L`` in ``H`` (count
  pairs of an order ``k - 1`` copy and one extra vertex);
* covers: ``sum_H w(H) #H = #(k; spec)`` with ``w(H)`` the number of
  clique selections of ``H`` of the given shape covering all of ``H``.

Each system is eliminated once and cached; per graph only the
right-hand side changes.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from ..algebra import Elimination, RationalMatrix, Solution, eliminate, solve_with
from ..covers import CoverSpec, cover_count, vertex_count
from ..engine import MBarVector
from ..errors import RecoveryError
from ..graphs import GraphCatalog, count_covering_clique_selections, count_induced_copies, generate_nonisomorphic
from .report import SubgraphCountReport

# Cover shapes used at each order, as {clique size: multiplicity}.
COVER_ROWS: dict[int, list[dict[int, int]]] = {
    2: [{2: 1}],
    3: [{3: 1}, {2: 2}],
    4: [{4: 1}, {2: 5}, {2: 1, 3: 1}, {2: 4}, {2: 3}, {2: 2}],
    5: [{5: 1}, {3: 1, 4: 1}, {2: 1, 4: 1}, {2: 2, 4: 1}]
    + [{2: a, 3: t} for t in range(3) for a in range(10) if a + t],
}

LIFT_MODES = ("all", "determined")


@dataclass(frozen=True)
class LevelSystem:
    """Coefficient matrix for one order, columns labelled by catalog ids.

    ``rows`` describes how each right-hand side entry is produced:
    ``("sum",)``, ``("lift", i)`` for row ``i`` of the previous order,
    ``("lift-known", id)`` for a determined previous-order count, or
    ``("cover", spec)``.
    """

    order: int
    lifts: str
    catalog: GraphCatalog
    matrix: RationalMatrix
    rows: tuple
    elimination: Elimination

    @property
    def rank(self) -> int:
        return self.elimination.rank

    def determined_ids(self) -> list[str]:
        labels = self.matrix.col_labels
        return [labels[c] for c in self.elimination.reduced.determined_columns()]


@lru_cache(maxsize=None)
def _containment(k: int) -> tuple[tuple[int, ...], ...]:
    """``c[L][H]``: induced copies of order ``k - 1`` graph ``L`` in order ``k`` graph ``H``."""
    lower, upper = generate_nonisomorphic(k - 1), generate_nonisomorphic(k)
    return tuple(tuple(count_induced_copies(H.graph, L.graph) for H in upper) for L in lower)


@lru_cache(maxsize=None)
def level_system(k: int, lifts: str = "all") -> LevelSystem:
    if lifts not in LIFT_MODES:
        raise ValueError(f"lifts must be one of {LIFT_MODES}")
    if k > max(COVER_ROWS):
        raise RecoveryError(f"no recovery system for order {k}")
    catalog = generate_nonisomorphic(k)
    width = len(catalog)
    rows: list[tuple] = [(1,) * width]
    labels = [f"sum{k}"]
    kinds: list[tuple] = [("sum",)]
    if k > 1:
        prev = level_system(k - 1)
        c = _containment(k)
        if lifts == "all":
            for i, (a, lab) in enumerate(zip(prev.matrix.rows, prev.matrix.row_labels)):
                rows.append(tuple(sum(a[l] * c[l][h] for l in range(len(a)) if a[l]) for h in range(width)))
                labels.append(f"lift({lab})")
                kinds.append(("lift", i))
        else:
            for gid in prev.determined_ids():
                l = prev.catalog.index(gid)
                rows.append(tuple(c[l]))
                labels.append(f"lift-known({prev.catalog.name(gid)})")
                kinds.append(("lift-known", gid))
    for shape in COVER_ROWS.get(k, ()):
        spec = CoverSpec(k, tuple(shape.items()))
        rows.append(tuple(count_covering_clique_selections(e.graph, shape) for e in catalog))
        labels.append(f"cover({spec})")
        kinds.append(("cover", spec))
    matrix = RationalMatrix.from_rows(rows, catalog.ids, labels)
    return LevelSystem(k, lifts, catalog, matrix, tuple(kinds), eliminate(matrix))


class ComplementCounts:
    """Solves the level systems for one vector, caching per order."""

    def __init__(self, v: MBarVector):
        self.v = v
        self.n = vertex_count(v)
        self._rhs: dict = {}
        self._solutions: dict = {}

    def rhs(self, k: int, lifts: str = "all") -> list[int]:
        key = (k, lifts)
        if key not in self._rhs:
            system = level_system(k, lifts)
            n = self.n
            out = []
            for kind in system.rows:
                if kind[0] == "sum":
                    out.append(comb(n, k))
                elif kind[0] == "lift":
                    out.append((n - k + 1) * self.rhs(k - 1)[kind[1]])
                elif kind[0] == "lift-known":
                    out.append((n - k + 1) * self.solve(k - 1).values[kind[1]])
                else:
                    spec = kind[1]
                    out.append(cover_count(self.v, spec) if spec.i1 <= n else 0)
            self._rhs[key] = out
        return self._rhs[key]

    def solve(self, k: int, lifts: str = "all") -> Solution:
        key = (k, lifts)
        if key not in self._solutions:
            self._solutions[key] = solve_with(level_system(k, lifts).elimination, self.rhs(k, lifts))
        return self._solutions[key]


def _as_count(value: Fraction, label: str, provenance) -> int:
    if value.denominator != 1 or value < 0:
        raise RecoveryError(f"recovered count for {label} is {value}; derived from {', '.join(provenance)}")
    return int(value)


def recover_order(v: MBarVector, k: int, lifts: str = "all", counts: ComplementCounts | None = None) -> SubgraphCountReport:
    """Induced counts in ``G`` of every order-``k`` graph that the level
    system pins down, plus the residual constraints on the rest."""
    counts = counts or ComplementCounts(v)
    system = level_system(k, lifts)
    catalog = system.catalog
    flip = catalog.complement_ids()
    n = counts.n
    if n < k:
        zero = RationalMatrix((), (), ())
        return SubgraphCountReport(
            k, n, catalog, {i: 0 for i in catalog.ids}, zero, (), {i: [f"n={n} < {k}"] for i in catalog.ids}
        )
    sol = counts.solve(k, lifts)
    determined = {}
    provenance = {}
    for cid, value in sol.values.items():
        gid = flip[cid]
        determined[gid] = _as_count(value, catalog.name(gid), sol.provenance[cid])
        provenance[gid] = sol.provenance[cid]
    residual = RationalMatrix(
        sol.residual.rows, tuple(flip[c] for c in sol.residual.col_labels), sol.residual.row_labels
    )
    return SubgraphCountReport(k, n, catalog, determined, residual, sol.residual_rhs, provenance)


def order4_recover(v: MBarVector, counts: ComplementCounts | None = None) -> SubgraphCountReport:
    return recover_order(v, 4, "all", counts)


def order5_recover(v: MBarVector, lifts: str = "all", counts: ComplementCounts | None = None) -> SubgraphCountReport:
    """Order-5 counts.

    ``lifts="all"`` lifts every order-4 relation (including the residual
    ones); ``lifts="determined"`` lifts only the determined order-4 counts.
    """
    return recover_order(v, 5, lifts, counts)
