"""Group graphs by invariant and report nonisomorphic collisions."""
from __future__ import annotations

import json
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .engine import chromatic_fingerprint, fingerprint
from .graphs import Graph, canonical_label, to_graph6

INVARIANTS = ("kromatic", "classical")


@dataclass
class ScanResult:
    """Outcome of a scan.

    ``collision_groups`` lists graph6 strings of pairwise nonisomorphic
    graphs sharing the scanned invariant.  For the classical invariant
    ``xg_collision_groups`` holds the same groups, each marked with whether
    the Kromatic fingerprints of its members are pairwise distinct.
    """

    invariant: str
    total: int
    classes: int
    collision_groups: list[list[str]] = field(default_factory=list)
    xg_collision_groups: list[dict] = field(default_factory=list)

    @property
    def smallest_collision_order(self) -> int | None:
        orders = [_order(grp[0]) for grp in self.collision_groups]
        return min(orders) if orders else None

    def to_json(self) -> dict:
        return {
            "invariant": self.invariant,
            "total": self.total,
            "classes": self.classes,
            "collision_groups": self.collision_groups,
            "xg_collision_groups": self.xg_collision_groups,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def to_text(self) -> str:
        lines = [
            f"invariant: {self.invariant}",
            f"graphs: {self.total}",
            f"classes: {self.classes}",
            f"collision groups: {len(self.collision_groups)}",
        ]
        if self.invariant == "classical":
            for grp in self.xg_collision_groups:
                flag = "separated by Kromatic" if grp["separated_by_kromatic"] else "NOT separated by Kromatic"
                lines.append(f"  {' '.join(grp['graphs'])}  [{flag}]")
        else:
            for grp in self.collision_groups:
                lines.append(f"  {' '.join(grp)}")
        return "\n".join(lines) + "\n"


def _order(g6: str) -> int:
    return ord(g6[0]) - 63


def _map(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _nonisomorphic_groups(graphs: Sequence[Graph], keys: Sequence) -> list[list[int]]:
    """Indices grouped by key, keeping one graph per isomorphism class and
    only groups with at least two classes."""
    by_key: dict = defaultdict(list)
    for i, k in enumerate(keys):
        by_key[k].append(i)
    groups = []
    for members in by_key.values():
        if len(members) < 2:
            continue
        seen = {}
        for i in members:
            seen.setdefault(canonical_label(graphs[i]), i)
        if len(seen) >= 2:
            groups.append(sorted(seen.values()))
    groups.sort()
    return groups


def _isomorphism_classes(graphs: Sequence[Graph]) -> list[Graph]:
    seen = {}
    for g in graphs:
        seen.setdefault(canonical_label(g), g)
    return list(seen.values())


def scan(graphs: Sequence[Graph], invariant: str = "kromatic", jobs: int = 1) -> ScanResult:
    """Scan ``graphs`` (isomorphic duplicates are collapsed first)."""
    if invariant not in INVARIANTS:
        raise ValueError(f"invariant must be one of {INVARIANTS}")
    graphs = _isomorphism_classes(graphs)
    fn = fingerprint if invariant == "kromatic" else chromatic_fingerprint
    keys = _map(fn, graphs, jobs)
    groups = _nonisomorphic_groups(graphs, keys)
    result = ScanResult(invariant, len(graphs), len(set(keys)))
    for grp in groups:
        # a reported group must be pairwise nonisomorphic; checked again here
        labels = [canonical_label(graphs[i]) for i in grp]
        assert len(set(labels)) == len(labels)
        result.collision_groups.append([to_graph6(graphs[i]) for i in grp])
    if invariant == "classical":
        for grp in groups:
            kfp = [fingerprint(graphs[i]) for i in grp]
            result.xg_collision_groups.append(
                {
                    "graphs": [to_graph6(graphs[i]) for i in grp],
                    "separated_by_kromatic": len(set(kfp)) == len(kfp),
                }
            )
    return result
