"""Induced copies of a star plus isolated vertices.

On the complement side a star on ``h`` vertices plus ``k`` isolated
vertices (``j = h + k``) is ``K_{j-1}`` plus one vertex joined to exactly
``k`` clique vertices, written ``K_{j-1} + k.e`` below.  Covering a
``j``-set with one ``(j-1)``-clique and ``i`` edges forces the set to
contain ``K_{j-1}``; the outside vertex must be hit by one of the edges.
That gives, for ``i = 1 .. j-1``::

    sum_m a_m (C(C(j-1, 2) + m, i) - C(C(j-1, 2), i)) #(K_{j-1} + m.e) = #(j; i2=i, i_{j-1}=1)

with ``a_m`` the number of ``(j-1)``-cliques in ``K_{j-1} + m.e``.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb

from ..algebra import Partition, RationalMatrix, eliminate, solve_with
from ..covers import CoverSpec, cover_count, vertex_count
from ..engine import MBarVector
from ..errors import RecoveryError, SingularSystemError
from .small import order_leq3_counts


def clique_multiplicity(j: int, m: int) -> int:
    """Number of ``(j-1)``-cliques in ``K_{j-1} + m.e``."""
    if m == j - 1:
        return j
    if m == j - 2:
        return 2
    return 1


@lru_cache(maxsize=None)
def star_system(j: int):
    """Coefficient matrix (rows ``i``, columns ``m``, both ``1 .. j-1``) and its elimination."""
    if j < 4:
        raise ValueError("the star system needs j >= 4")
    base = comb(j - 1, 2)
    rows = [
        [clique_multiplicity(j, m) * (comb(base + m, i) - comb(base, i)) for m in range(1, j)]
        for i in range(1, j)
    ]
    matrix = RationalMatrix.from_rows(
        rows, [f"K{j - 1}+{m}e" for m in range(1, j)], [f"cover(i1={j},i2={i},i{j - 1}=1)" for i in range(1, j)]
    )
    elim = eliminate(matrix)
    if elim.rank != j - 1:
        raise SingularSystemError(f"star system for j={j} has rank {elim.rank} < {j - 1}")
    return matrix, elim


def star_recover(v: MBarVector, h: int, k: int) -> int:
    """Induced copies in ``G`` of the ``h``-vertex star plus ``k`` isolated vertices."""
    if h < 2:
        raise ValueError("h must be at least 2 (h = 1 is a stable set, not handled here)")
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = vertex_count(v)
    j = h + k
    if j > n:
        return 0
    if j == 2:
        return order_leq3_counts(v).edges
    if j == 3:
        small = order_leq3_counts(v)
        return small.induced_p3 if k == 0 else small.edge_plus_vertex
    _, elim = star_system(j)
    rhs = [cover_count(v, CoverSpec(j, ((2, i), (j - 1, 1)))) for i in range(1, j)]
    x = [solve_with(elim, rhs).values[f"K{j - 1}+{m}e"] for m in range(1, j)]
    if k >= 1:
        value = x[k - 1]
    else:
        cliques = v[Partition((j - 1,) + (1,) * (n - j + 1))]
        value = (n - j + 1) * cliques - sum(clique_multiplicity(j, m) * x[m - 1] for m in range(1, j))
    if value.denominator != 1 or value < 0:
        raise RecoveryError(f"star count for h={h}, k={k} came out as {value}")
    return int(value)
