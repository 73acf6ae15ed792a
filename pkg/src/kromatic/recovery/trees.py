"""Complete order-4 and order-5 counts when ``G`` is a tree.

Induced subgraphs of a tree are forests.  Every forest on four or five
vertices except P4, chair and P4+v is among the determined counts, and
those three follow from counting identities.
"""
from __future__ import annotations

from math import comb

from ..algebra import RationalMatrix
from ..engine import MBarVector
from ..errors import RecoveryError
from .report import SubgraphCountReport
from .small import order_leq3_counts
from .systems import ComplementCounts, order4_recover, order5_recover


def _is_forest(g) -> bool:
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, w in g.edges():
        ru, rw = find(u), find(w)
        if ru == rw:
            return False
        parent[ru] = rw
    return True


def _complete(report: SubgraphCountReport, extra: dict[str, int], notes: dict[str, str]) -> SubgraphCountReport:
    cat = report.catalog
    determined = {}
    provenance = {}
    for e in cat:
        if e.id in extra:
            determined[e.id] = extra[e.id]
            provenance[e.id] = [notes[e.id]]
        elif not _is_forest(e.graph):
            determined[e.id] = 0
            provenance[e.id] = ["not a forest"]
        elif e.id in report.determined:
            determined[e.id] = report.determined[e.id]
            provenance[e.id] = report.provenance.get(e.id, [])
        else:
            raise RecoveryError(f"forest {e.name} has no tree formula")
    for gid, value in determined.items():
        if value < 0:
            raise RecoveryError(f"negative tree count {value} for {cat.name(gid)}: {provenance[gid]}")
    return SubgraphCountReport(report.order, report.n, cat, determined, RationalMatrix((), (), ()), (), provenance)


def tree_recover(v: MBarVector) -> tuple[SubgraphCountReport, SubgraphCountReport]:
    """Every order-4 and order-5 induced count of a tree.

    Rejects vectors whose graph does not have ``n - 1`` edges and no
    triangles.  Those checks do not rule out every non-tree (a 4-cycle
    plus an isolated vertex passes), so the caller vouches for the rest.
    """
    small = order_leq3_counts(v)
    n = small.vertices
    if small.edges != n - 1 or small.triangles:
        raise RecoveryError(
            f"not a tree: {small.edges} edges and {small.triangles} triangles on {n} vertices"
        )
    counts = ComplementCounts(v)
    r4 = order4_recover(v, counts)
    r5 = order5_recover(v, "all", counts)
    if n < 4:
        return r4, r5
    c4 = r4.catalog
    p4 = c4.id_of("P4")
    others4 = [e.id for e in c4 if _is_forest(e.graph) and e.id != p4]
    full4 = _complete(
        r4,
        {p4: comb(n, 4) - sum(r4.determined[i] for i in others4)},
        {p4: "C(n,4) minus the other order-4 forests"},
    )
    if n < 5:
        return full4, r5
    c5 = r5.catalog
    chair, p4v = c5.id_of("chair"), c5.id_of("P4+v")
    claw = full4.determined[c4.id_of("claw")]
    # pairs (induced claw, extra vertex): the 5-set is K14 (4 claws), claw+v or chair
    chair_count = (n - 4) * claw - 4 * r5.determined[c5.id_of("K14")] - r5.determined[c5.id_of("claw+v")]
    others5 = [e.id for e in c5 if _is_forest(e.graph) and e.id not in (chair, p4v)]
    p4v_count = comb(n, 5) - chair_count - sum(r5.determined[i] for i in others5)
    full5 = _complete(
        r5,
        {chair: chair_count, p4v: p4v_count},
        {chair: "(n-4)*claw - 4*K14 - claw+v", p4v: "C(n,5) minus the other order-5 forests"},
    )
    return full4, full5
