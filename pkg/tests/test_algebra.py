from fractions import Fraction
from itertools import product

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from kromatic.algebra import (
    Partition,
    RationalMatrix,
    eliminate,
    partitions_bounded,
    partitions_of,
    rank,
    residual_of,
    rref,
    solve_exact,
)
from kromatic.errors import InconsistentSystemError


# partitions --------------------------------------------------------------

def test_partition_sorted_nonincreasing():
    assert tuple(Partition([1, 3, 2])) == (3, 2, 1)
    with pytest.raises(ValueError):
        Partition([2, 0])


def test_partitions_bounded_examples():
    assert partitions_bounded(2, 2, 4) == [(1,), (2,), (1, 1), (2, 1), (2, 2)]
    assert partitions_bounded(1, 3, 3) == [(1,), (1, 1), (1, 1, 1)]
    assert sum(1 for p in partitions_bounded(5, 5, 5) if p.weight == 5) == 7


@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 9))
def test_partitions_bounded_brute_force(max_part, max_len, max_weight):
    want = set()
    for length in range(1, max_len + 1):
        for parts in product(range(1, max_part + 1), repeat=length):
            if sum(parts) <= max_weight and list(parts) == sorted(parts, reverse=True):
                want.add(parts)
    got = partitions_bounded(max_part, max_len, max_weight)
    assert len(got) == len(set(got))
    assert set(got) == want
    assert [p.sort_key() for p in got] == sorted(p.sort_key() for p in got)


@given(st.dictionaries(st.integers(1, 6), st.integers(0, 4)))
def test_multiplicity_roundtrip(mult):
    p = Partition.from_multiplicities(mult)
    assert {j: i for j, i in mult.items() if i} == p.multiplicities()
    vec = p.multiplicity_vector()
    assert Partition.from_multiplicities({j + 1: i for j, i in enumerate(vec)}) == p


def test_partition_text():
    p = Partition.parse("3,2,2,1")
    assert p.to_text() == "3,2,2,1"
    assert Partition.parse("") == Partition()
    assert p.multiplicity_vector() == (1, 2, 1)


def test_partition_counts():
    # partition numbers p(1..10)
    assert [sum(1 for _ in partitions_of(w)) for w in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


# rref and solving ---------------------------------------------------------

def test_rref_identity_and_rank_one():
    eye = RationalMatrix.identity(3)
    assert rref(eye).rows == eye.rows
    assert rref(RationalMatrix.from_rows([[2, 4], [1, 2]])).to_int_rows() == [[1, 2]]


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=r, max_size=r
        )
    )
)


@settings(max_examples=80)
@given(matrices)
def test_rref_against_sympy(rows):
    ours = rref(RationalMatrix.from_rows(rows))
    theirs, pivots = sympy.Matrix(rows).rref()
    nonzero = [list(theirs.row(i)) for i in range(theirs.rows) if any(theirs.row(i))]
    assert [[Fraction(int(x.p), int(x.q)) for x in r] for r in nonzero] == [list(r) for r in ours.rows]
    assert ours.pivots == tuple(pivots)


@settings(max_examples=80)
@given(matrices)
def test_rref_shape_and_idempotence(rows):
    r = rref(RationalMatrix.from_rows(rows))
    for i, (row, p) in enumerate(zip(r.rows, r.pivots)):
        assert row[p] == 1
        assert all(r.rows[k][p] == 0 for k in range(len(r.rows)) if k != i)
        assert all(x == 0 for x in row[:p])
    assert list(r.pivots) == sorted(set(r.pivots))
    assert rref(r).rows == r.rows


@settings(max_examples=80)
@given(matrices)
def test_rref_preserves_row_space(rows):
    m = RationalMatrix.from_rows(rows)
    r = rref(m)
    # every original row is a combination of the reduced rows: read coefficients at the pivots
    for row in m.rows:
        combo = [row[p] for p in r.pivots]
        rebuilt = [sum(c * rr[j] for c, rr in zip(combo, r.rows)) for j in range(len(row))]
        assert rebuilt == list(row)


def test_solve_small():
    sol = solve_exact(RationalMatrix.from_rows([[1, 1], [1, -1]], ["x", "y"]), [3, 1])
    assert sol.is_unique
    assert sol.values == {"x": 2, "y": 1}


def test_solve_inconsistent_names_rows():
    m = RationalMatrix.from_rows([[0]], ["x"], ["zero row"])
    with pytest.raises(InconsistentSystemError) as err:
        solve_exact(m, [1])
    assert err.value.provenance == ("zero row",)


@settings(max_examples=80)
@given(matrices, st.data())
def test_solutions_substitute_back(rows, data):
    m = RationalMatrix.from_rows(rows)
    x = data.draw(st.lists(st.integers(-5, 5), min_size=m.shape[1], max_size=m.shape[1]))
    b = [sum(a * xi for a, xi in zip(row, x)) for row in m.rows]
    sol = solve_exact(m, b)
    # determined coordinates are forced, so they equal the planted ones
    for lab, val in sol.values.items():
        assert val == x[m.col_labels.index(lab)]
    # the residual system is satisfied by the planted solution
    free = {lab: x[m.col_labels.index(lab)] for lab in sol.residual.col_labels}
    if sol.residual.rows:
        assert all(r == 0 for r in residual_of(sol.residual, sol.residual_rhs, free))
    assert len(sol.values) + len(sol.residual.rows) == rank(m)
    if sol.is_unique:
        assert all(r == 0 for r in residual_of(m, b, sol.values))


def test_elimination_null_combinations():
    m = RationalMatrix.from_rows([[1, 1], [2, 2], [0, 1]])
    e = eliminate(m)
    assert e.rank == 2
    (combo,) = e.null_combinations
    assert all(sum(c * row[j] for c, row in zip(combo, m.rows)) == 0 for j in range(2))
