"""Self-verification suites: every pipeline against its brute-force oracle.

Each suite walks the exhaustive catalogs in increasing order, so the
first failure it reports is a smallest failing instance.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable

from .covers import CoverOracle, CoverSpec, cover_count
from .engine import classical_chromatic, expand_mbar, kromatic_truncated, mbar_vector
from .graphs import (
    GENERATION_CAP,
    Graph,
    count_induced_copies,
    generate_nonisomorphic,
    induced_census,
    seeded_graphs,
    seeded_trees,
    to_graph6,
)
from .recovery import ComplementCounts, order4_recover, order5_recover, star_recover, tree_recover

SUITES = ("basis", "lemma", "order4", "order5", "tree", "stars")

DEFAULT_SIZES = {
    "basis": (1, 6),
    "lemma": (1, 6),
    "order4": (1, 7),
    "order5": (1, 7),
    "tree": (6, 12),
    "stars": (1, 7),
}

LEMMA_GRID = [
    CoverSpec.of(i1, i2=a, i3=b, i4=c, i5=d)
    for i1, a, b, c, d in product(range(7), range(6), range(3), range(2), range(2))
]


@dataclass
class SuiteResult:
    suite: str
    checked: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.suite}: {self.checked} graphs checked"
        if self.failures:
            g6, why = self.failures[0]
            text += f"; smallest failure {g6}: {why}"
        return text


def _catalog_graphs(sizes: tuple[int, int]) -> Iterable[Graph]:
    lo, hi = sizes
    for n in range(max(lo, 1), min(hi, GENERATION_CAP) + 1):
        for e in generate_nonisomorphic(n):
            yield e.graph


def _check_basis(g: Graph) -> str | None:
    n = g.n
    direct = kromatic_truncated(g, n + 2)
    if expand_mbar(mbar_vector(g), n + 2) != direct:
        return "monomial expansion differs from the augmented-monomial vector"
    if direct.homogeneous_part(n).coeffs != classical_chromatic(g).coeffs:
        return "lowest-degree part differs from the chromatic symmetric function"
    return None


def _check_lemma(g: Graph) -> str | None:
    v = mbar_vector(g)
    oracle = CoverOracle(g, {2: 5, 3: 2, 4: 1, 5: 1})
    for spec in LEMMA_GRID:
        if spec.i1 <= g.n and cover_count(v, spec) != oracle(spec):
            return f"cover count mismatch at {spec}"
    return None


def _check_report(g: Graph, report, census) -> str | None:
    for gid, value in report.determined.items():
        if census.get(gid, 0) != value:
            return f"{report.catalog.name(gid)}: recovered {value}, oracle {census.get(gid, 0)}"
    truth = [census.get(gid, 0) for gid in report.residual.col_labels]
    for row, rhs, lab in zip(report.residual.rows, report.residual_rhs, report.residual.row_labels):
        if sum(a * x for a, x in zip(row, truth)) != rhs:
            return f"residual row {lab} violated by the true counts"
    return None


def _check_order(order: int) -> Callable[[Graph], str | None]:
    def check(g: Graph) -> str | None:
        v = mbar_vector(g)
        counts = ComplementCounts(v)
        census = induced_census(g, order)
        if order == 4:
            reports = [order4_recover(v, counts)]
        else:
            reports = [order5_recover(v, "all", counts), order5_recover(v, "determined", counts)]
        for r in reports:
            why = _check_report(g, r, census)
            if why:
                return why
        return None

    return check


def _check_tree(g: Graph) -> str | None:
    r4, r5 = tree_recover(mbar_vector(g))
    for r in (r4, r5):
        if r.n >= r.order:
            census = induced_census(g, r.order)
            for e in r.catalog:
                if r.determined.get(e.id) != census.get(e.id, 0):
                    return f"{e.name}: recovered {r.determined.get(e.id)}, oracle {census.get(e.id, 0)}"
    return None


def _check_stars(g: Graph) -> str | None:
    v = mbar_vector(g)
    for h in range(2, 7):
        for k in range(0, 7 - h):
            star = Graph.star(h).disjoint_union(Graph.empty(k)) if k else Graph.star(h)
            got = star_recover(v, h, k)
            want = count_induced_copies(g, star) if star.n <= g.n else 0
            if got != want:
                return f"star h={h} k={k}: recovered {got}, oracle {want}"
    return None


def run_suite(name: str, sizes: tuple[int, int] | None = None, seed: int = 0, random_graphs: int = 0) -> SuiteResult:
    """Run one suite.  ``random_graphs`` adds that many seeded graphs on
    ``sizes[1] + 1`` vertices to the order-4/5 suites."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES} or 'all'")
    sizes = sizes or DEFAULT_SIZES[name]
    checks = {
        "basis": _check_basis,
        "lemma": _check_lemma,
        "order4": _check_order(4),
        "order5": _check_order(5),
        "tree": _check_tree,
        "stars": _check_stars,
    }
    check = checks[name]
    if name == "tree":
        graphs: Iterable[Graph] = sorted(seeded_trees(100, sizes[0], sizes[1], seed), key=lambda t: t.n)
    else:
        graphs = _catalog_graphs(sizes)
        if random_graphs and name in ("order4", "order5"):
            graphs = list(graphs) + seeded_graphs(random_graphs, sizes[1] + 1, seed)
    result = SuiteResult(name)
    for g in graphs:
        result.checked += 1
        try:
            why = check(g)
        except Exception as exc:  # a crash is a failure of the suite, not of the runner
            why = f"{type(exc).__name__}: {exc}"
        if why:
            result.failures.append((to_graph6(g), why))
    return result


def run_suites(name: str, sizes=None, seed: int = 0, random_graphs: int = 0) -> list[SuiteResult]:
    names = SUITES if name == "all" else (name,)
    return [run_suite(s, sizes, seed, random_graphs) for s in names]
