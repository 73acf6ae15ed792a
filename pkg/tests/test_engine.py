import itertools
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from kromatic.algebra import Partition
from kromatic.engine import (
    ENGINE_CAP,
    MBarVector,
    chromatic_fingerprint,
    classical_chromatic,
    count_stable_covers,
    expand_mbar,
    fingerprint,
    kromatic_by_set_colourings,
    kromatic_truncated,
    mbar_coefficient,
    mbar_to_monomial,
    mbar_vector,
    mbar_vector_direct,
)
from kromatic.errors import CapabilityError, ParseError
from kromatic.graphs import Graph, alias_graph, canonical_order, generate_nonisomorphic


def brute_covers(g, lam):
    """Families of distinct stable sets with sizes lam covering V, by exhaustion."""
    stable = {
        s: [set(c) for c in itertools.combinations(range(g.n), s)
            if not any(g.has_edge(u, v) for u, v in itertools.combinations(c, 2))]
        for s in set(lam)
    }
    mult = Partition(lam).multiplicities()
    pools = [itertools.combinations(stable[s], m) for s, m in mult.items()]
    total = 0
    for choice in itertools.product(*pools):
        covered = set().union(*(x for group in choice for x in group))
        total += covered == set(range(g.n))
    return total


def brute_support(g):
    stable = [
        c for s in range(1, g.n + 1) for c in itertools.combinations(range(g.n), s)
        if not any(g.has_edge(u, v) for u, v in itertools.combinations(c, 2))
    ]
    out = {}
    for r in range(1, len(stable) + 1):
        for fam in itertools.combinations(stable, r):
            if set().union(*fam) == set(range(g.n)):
                lam = Partition(len(c) for c in fam)
                out[lam] = out.get(lam, 0) + 1
    return out


# mbar coefficients --------------------------------------------------------

def test_all_ones_coefficient():
    for e in generate_nonisomorphic(5):
        v = mbar_vector(e.graph)
        assert v[(1,) * 5] == 1
        assert all(v[(1,) * k] == 0 for k in range(12) if k != 5)


def test_coefficient_examples():
    assert mbar_coefficient(Graph.empty(2), (2, 1)) == 2 == brute_covers(Graph.empty(2), (2, 1))
    assert mbar_coefficient(Graph.path(3), (2, 1)) == 1 == brute_covers(Graph.path(3), (2, 1))
    assert mbar_coefficient(Graph.cycle(5), (1,) * 5) == 1


def test_vector_examples():
    assert mbar_vector(Graph.complete(2)).to_dict() == {(1, 1): 1} == brute_support(Graph.complete(2))
    assert mbar_vector(Graph.empty(1)).to_dict() == {(1,): 1}
    want = {(1, 1): 1, (2,): 1, (2, 1): 2, (2, 1, 1): 1}
    assert brute_support(Graph.empty(2)) == want
    assert mbar_vector(Graph.empty(2)).to_dict() == want


def test_full_support_matches_family_enumeration():
    for n in range(1, 5):
        for e in generate_nonisomorphic(n):
            assert mbar_vector(e.graph).to_dict() == brute_support(e.graph), e.name


def test_vector_matches_direct_knapsack():
    for n in range(1, 5):
        for e in generate_nonisomorphic(n):
            assert mbar_vector(e.graph) == mbar_vector_direct(e.graph)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=5), st.data())
def test_three_coefficient_routes_agree(g, data):
    v = mbar_vector(g)
    support = v.terms()
    lam, c = data.draw(st.sampled_from(support))
    assert mbar_coefficient(g, lam) == c == count_stable_covers(g, lam)
    if c < 5000:
        assert brute_covers(g, lam) == c


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=5), st.lists(st.integers(1, 3), min_size=1, max_size=6))
def test_coefficient_off_support(g, parts):
    lam = Partition(parts)
    assert mbar_vector(g)[lam] == mbar_coefficient(g, lam) == count_stable_covers(g, lam)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_vector_relabeling_invariant(g, rnd):
    order = list(range(g.n))
    rnd.shuffle(order)
    assert mbar_vector(g.relabel(order)) == mbar_vector(g)
    assert fingerprint(g.relabel(order)) == fingerprint(g)


def test_support_bounds():
    g = alias_graph("bull")
    terms = mbar_vector(g).terms()
    assert terms
    stable_sets = sum(
        1 for s in range(1, 6) for c in itertools.combinations(range(5), s) if g.is_stable(sum(1 << v for v in c))
    )
    for lam, _ in terms:
        assert lam[0] <= 3  # independence number of the bull
        assert len(lam) <= stable_sets


def test_from_coefficients_roundtrip():
    for e in generate_nonisomorphic(4):
        v = mbar_vector(e.graph)
        assert MBarVector.from_coefficients(v.to_dict()) == v
        assert MBarVector.from_text(v.to_text()) == v


def test_text_format_sorted():
    text = mbar_vector(Graph.empty(2)).to_text()
    assert text == "2 : 1\n1,1 : 1\n2,1 : 2\n2,1,1 : 1\n"
    with pytest.raises(ParseError):
        MBarVector.from_text("2 1\n")


def test_weighted_graphs_rejected():
    with pytest.raises(ValueError):
        mbar_vector(Graph.path(2).with_weights([2, 1]))


def test_engine_cap():
    with pytest.raises(CapabilityError):
        mbar_vector(Graph.empty(ENGINE_CAP + 1))


def test_full_support_guard():
    v = mbar_vector(Graph.empty(7))
    with pytest.raises(CapabilityError):
        v.terms()
    low = v.terms(max_weight=3)
    assert all(p.weight <= 3 for p, _ in low)
    # weight <= 3 terms of the empty graph: covers need at least 7 vertex slots, so none
    assert low == []
    assert v.terms(max_weight=7)[0] == (Partition((7,)), 1)
    assert v[(1,) * 7] == 1


# monomial expansions ------------------------------------------------------

def test_truncated_examples():
    assert kromatic_truncated(Graph.empty(1), 3).coeffs == {(1,): 1, (1, 1): 1, (1, 1, 1): 1}
    assert kromatic_truncated(Graph.empty(1).with_weights([2]), 4).coeffs == {(2,): 1, (2, 2): 1}
    k2 = kromatic_truncated(Graph.complete(2), 3)
    assert k2 == kromatic_by_set_colourings(Graph.complete(2), 3)
    assert k2[(1, 1)] == 2
    assert k2[(2,)] == 0 and k2[(2, 1)] == 0


def test_mbar_to_monomial_examples():
    assert mbar_to_monomial((1,), 2).coeffs == {(1,): 1, (1, 1): 1}
    assert mbar_to_monomial((1, 1), 2).coeffs == {(1, 1): 2}
    assert mbar_to_monomial((2,), 4).coeffs == {(2,): 1, (2, 2): 1}


@settings(max_examples=25, deadline=None)
@given(graphs(max_n=3), st.integers(1, 4))
def test_truncated_against_set_colourings(g, degree):
    assert kromatic_truncated(g, degree) == kromatic_by_set_colourings(g, degree)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=3), st.integers(1, 5), st.booleans())
def test_weighted_truncated_against_set_colourings(weights, degree, edge):
    n = len(weights)
    g = Graph.from_edges(n, [(0, 1)] if edge and n > 1 else []).with_weights(weights)
    assert kromatic_truncated(g, degree) == kromatic_by_set_colourings(g, degree)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=5))
def test_basis_consistency(g):
    d = g.n + 2
    assert expand_mbar(mbar_vector(g), d) == kromatic_truncated(g, d)


# classical ------------------------------------------------------------------

def test_classical_examples():
    assert classical_chromatic(Graph.complete(3))[(1, 1, 1)] == 6
    two = classical_chromatic(Graph.empty(2))
    assert two[(2,)] == 1 and two[(1, 1)] == 2
    assert classical_chromatic(Graph.complete(2))[(2,)] == 0


def _proper_colourings_by_type(g):
    counts = {}
    for col in itertools.product(range(g.n), repeat=g.n):
        if any(col[u] == col[v] for u, v in g.edges()):
            continue
        lam = Partition(col.count(c) for c in set(col))
        counts[lam] = counts.get(lam, 0) + 1
    return counts


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=5))
def test_classical_against_colourings(g):
    # with n colours available, a type lam is realised by perm(n, l) colourings per m_lam monomial
    from math import factorial, perm, prod

    x = classical_chromatic(g)
    for lam, count in _proper_colourings_by_type(g).items():
        monomials = perm(g.n, len(lam)) // prod(factorial(r) for r in lam.multiplicities().values())
        assert x[lam] * monomials == count


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_lowest_degree(g):
    low = kromatic_truncated(g, g.n).homogeneous_part(g.n)
    assert low.coeffs == classical_chromatic(g).coeffs


# fingerprints -------------------------------------------------------------

def test_fingerprint_examples():
    a = Graph.path(4)
    b = Graph.from_edges(4, [(2, 0), (0, 3), (3, 1)])
    assert fingerprint(a) == fingerprint(b)
    k3, p3 = Graph.complete(3), Graph.path(3)
    assert fingerprint(k3) != fingerprint(p3)
    assert brute_covers(k3, (2, 1)) != brute_covers(p3, (2, 1))


def test_fingerprint_canonical_relabeling():
    for n in range(1, 7):
        for e in generate_nonisomorphic(n):
            g = e.graph
            assert fingerprint(g.relabel(canonical_order(g))) == fingerprint(g)


def test_chromatic_fingerprint_collides_where_kromatic_does_not():
    kite, butterfly = alias_graph("kite"), alias_graph("butterfly")
    assert chromatic_fingerprint(kite) == chromatic_fingerprint(butterfly)
    assert fingerprint(kite) != fingerprint(butterfly)
