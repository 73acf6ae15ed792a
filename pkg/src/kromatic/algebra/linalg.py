"""Exact linear algebra over the rationals.

Everything is :class:`fractions.Fraction`; there is no floating point
anywhere.  Matrices carry column labels (unknown names) and row labels
(where each equation came from) so that a failed consistency check can
name the equations involved.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from ..errors import InconsistentSystemError

Row = tuple[Fraction, ...]


def _frac_row(row) -> Row:
    return tuple(Fraction(x) for x in row)


@dataclass(frozen=True)
class RationalMatrix:
    rows: tuple[Row, ...]
    col_labels: tuple[str, ...] = ()
    row_labels: tuple[str, ...] = ()
    #: Pivot column of each row; set only on matrices returned by :func:`rref`.
    pivots: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(_frac_row(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        width = len(rows[0]) if rows else len(self.col_labels)
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        if not self.col_labels:
            object.__setattr__(self, "col_labels", tuple(f"x{j}" for j in range(width)))
        elif len(self.col_labels) != width:
            raise ValueError("column labels do not match width")
        if not self.row_labels:
            object.__setattr__(self, "row_labels", tuple(f"row{i}" for i in range(len(rows))))
        elif len(self.row_labels) != len(rows):
            raise ValueError("row labels do not match height")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], col_labels=(), row_labels=()) -> "RationalMatrix":
        return cls(tuple(tuple(r) for r in rows), tuple(col_labels), tuple(row_labels))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.col_labels)

    def to_int_rows(self) -> list[list]:
        """Rows with integral entries shown as ``int``."""
        return [[int(x) if x.denominator == 1 else x for x in r] for r in self.rows]

    def determined_columns(self) -> list[int]:
        """Pivot columns whose row has no other nonzero entry (requires RREF)."""
        if self.pivots is None:
            raise ValueError("determined_columns needs a matrix returned by rref()")
        return [p for r, p in zip(self.rows, self.pivots) if sum(1 for x in r if x) == 1]


@dataclass(frozen=True)
class Elimination:
    """Gauss-Jordan elimination of a matrix with its row transform.

    ``transform[i]`` expresses reduced row ``i`` as a combination of the
    original rows; ``null_combinations`` are combinations that reduce to
    the zero row (each yields a consistency condition on a right-hand side).
    """

    reduced: RationalMatrix
    transform: tuple[Row, ...]
    null_combinations: tuple[Row, ...]
    source: RationalMatrix

    @property
    def rank(self) -> int:
        return len(self.reduced.rows)

    def apply(self, rhs: Sequence) -> tuple[Row, Row]:
        """Transformed right-hand side and the residuals of the null combinations."""
        b = _frac_row(rhs)
        if len(b) != len(self.source.rows):
            raise ValueError("right-hand side has the wrong length")
        reduced = tuple(sum((t * x for t, x in zip(row, b) if t), Fraction(0)) for row in self.transform)
        residual = tuple(sum((t * x for t, x in zip(row, b) if t), Fraction(0)) for row in self.null_combinations)
        return reduced, residual

    def provenance(self, combo: Row) -> list[str]:
        return [lab for lab, t in zip(self.source.row_labels, combo) if t]


def eliminate(m: RationalMatrix) -> Elimination:
    nrows, ncols = m.shape
    work = [list(r) + [Fraction(int(i == k)) for k in range(nrows)] for i, r in enumerate(m.rows)]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if work[i][c]), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        pivot_row = work[r]
        inv = 1 / pivot_row[c]
        if inv != 1:
            pivot_row[:] = [x * inv for x in pivot_row]
        nz = [k for k, x in enumerate(pivot_row) if x]
        for i in range(nrows):
            if i != r and work[i][c]:
                f = work[i][c]
                row = work[i]
                for k in nz:
                    row[k] -= f * pivot_row[k]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    reduced = RationalMatrix(
        tuple(tuple(row[:ncols]) for row in work[:r]),
        m.col_labels,
        tuple(f"rref{i}" for i in range(r)),
        tuple(pivots),
    )
    return Elimination(
        reduced,
        tuple(tuple(row[ncols:]) for row in work[:r]),
        tuple(tuple(row[ncols:]) for row in work[r:]),
        m,
    )


def rref(m: RationalMatrix) -> RationalMatrix:
    """Reduced row echelon form with zero rows dropped; ``pivots`` is filled in."""
    return eliminate(m).reduced


@dataclass(frozen=True)
class Solution:
    """Outcome of :func:`solve_exact`.

    ``kind`` is ``"unique"`` when every unknown is forced.  Otherwise
    ``values`` holds only the forced unknowns and ``residual`` /
    ``residual_rhs`` constrain the rest (columns are the remaining labels).
    """

    kind: str
    values: dict[str, Fraction]
    residual: RationalMatrix
    residual_rhs: tuple[Fraction, ...]
    provenance: dict[str, list[str]] = field(default_factory=dict)

    @property
    def is_unique(self) -> bool:
        return self.kind == "unique"


def solve_with(elim: Elimination, rhs: Sequence) -> Solution:
    """Solve using a precomputed elimination (the coefficient matrix is fixed,
    only the right-hand side varies)."""
    reduced_b, residuals = elim.apply(rhs)
    for combo, res in zip(elim.null_combinations, residuals):
        if res:
            raise InconsistentSystemError(f"system is inconsistent (0 = {res})", elim.provenance(combo))
    R = elim.reduced
    labels = R.col_labels
    determined = {}
    provenance = {}
    det_cols = set()
    for row, p, b, t in zip(R.rows, R.pivots, reduced_b, elim.transform):
        if sum(1 for x in row if x) == 1:
            determined[labels[p]] = b
            provenance[labels[p]] = elim.provenance(t)
            det_cols.add(p)
    free = [j for j in range(len(labels)) if j not in det_cols]
    res_rows = []
    res_labels = []
    res_rhs = []
    for i, (row, p, b) in enumerate(zip(R.rows, R.pivots, reduced_b)):
        if p in det_cols:
            continue
        res_rows.append(tuple(row[j] for j in free))
        res_labels.append(f"rref{i}")
        res_rhs.append(b)
    residual = RationalMatrix(tuple(res_rows), tuple(labels[j] for j in free), tuple(res_labels))
    kind = "unique" if not free else "underdetermined"
    return Solution(kind, determined, residual, tuple(res_rhs), provenance)


def solve_exact(m: RationalMatrix, b: Sequence) -> Solution:
    """Solve ``m x = b`` exactly.

    Raises :class:`InconsistentSystemError` naming the rows whose
    combination yields ``0 = nonzero``.
    """
    return solve_with(eliminate(m), b)


def residual_of(m: RationalMatrix, b: Sequence, values: Mapping[str, object]) -> list[Fraction]:
    """``m x - b`` for the assignment ``values`` (every column must be given)."""
    x = [Fraction(values[lab]) for lab in m.col_labels]
    return [sum((a * xi for a, xi in zip(row, x)), Fraction(0)) - Fraction(bi) for row, bi in zip(m.rows, b)]


def rank(m: RationalMatrix) -> int:
    return len(rref(m).rows)
