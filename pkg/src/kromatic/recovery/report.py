"""Recovered induced-subgraph counts and their serialisations."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra import RationalMatrix, rank
from ..graphs import GraphCatalog


def _num(x: Fraction):
    return int(x) if x.denominator == 1 else str(x)


def _linear_form(row, names) -> str:
    out = ""
    for c, name in zip(row, names):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        term = f"[{name}]" if mag == 1 else f"{_num(mag)}*[{name}]"
        out = (f"-{term}" if sign == "-" else term) if not out else f"{out} {sign} {term}"
    return out or "0"


@dataclass(frozen=True)
class SubgraphCountReport:
    """Induced-subgraph counts of ``G`` for one order.

    ``determined`` maps catalog id to the exact count; the remaining ids
    are the columns of ``residual``, whose rows (with ``residual_rhs``) are
    linear constraints the true counts satisfy.  All ids refer to graphs
    of ``G`` itself.
    """

    order: int
    n: int
    catalog: GraphCatalog
    determined: dict[str, int]
    residual: RationalMatrix
    residual_rhs: tuple[Fraction, ...] = ()
    provenance: dict[str, list[str]] = field(default_factory=dict)

    @property
    def undetermined(self) -> list[str]:
        return list(self.residual.col_labels)

    @property
    def residual_rank(self) -> int:
        return rank(self.residual) if self.residual.rows else 0

    def __getitem__(self, key) -> int | None:
        """Count for an id, alias or graph; ``None`` when undetermined."""
        return self.determined.get(self.catalog.id_of(key))

    def determined_names(self) -> list[str]:
        return [self.catalog.name(i) for i in self.catalog.ids if i in self.determined]

    def records(self) -> list[dict]:
        out = []
        for e in self.catalog:
            value = self.determined.get(e.id)
            out.append(
                {
                    "id": e.id,
                    "alias": e.name,
                    "count": value if value is not None else "undetermined",
                    "provenance": self.provenance.get(e.id, []),
                }
            )
        return out

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "n": self.n,
            "counts": self.records(),
            "residual": {
                "columns": list(self.residual.col_labels),
                "rows": [[_num(x) for x in r] for r in self.residual.rows],
                "rhs": [_num(x) for x in self.residual_rhs],
            },
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def to_table(self) -> str:
        lines = [f"order {self.order} induced subgraphs (n = {self.n})"]
        width = max((len(e.name) for e in self.catalog), default=4)
        for e in self.catalog:
            value = self.determined.get(e.id)
            shown = str(value) if value is not None else "undetermined"
            lines.append(f"  {e.name:<{width}}  {e.id:<10} {shown}")
        if self.residual.rows:
            names = [self.catalog.name(i) for i in self.residual.col_labels]
            lines.append(f"residual system ({len(self.residual.rows)} rows over {', '.join(names)}):")
            for row, b in zip(self.residual.rows, self.residual_rhs):
                lines.append(f"  {_linear_form(row, names)} = {_num(b)}")
        return "\n".join(lines) + "\n"
