import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_induced, graphs, to_nx
from kromatic.errors import CapabilityError, ParseError
from kromatic.graphs import (
    CliqueSelectionCensus,
    Graph,
    alias_graph,
    canonical_label,
    clique_masks,
    complement,
    count_covering_clique_selections,
    count_induced_copies,
    enumerate_cliques,
    enumerate_stable_sets,
    generate_by_filter,
    generate_nonisomorphic,
    is_isomorphic,
    load_catalog,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    read_graphs,
    seeded_graphs,
    seeded_trees,
    to_edge_list,
    to_graph6,
)


# graph6 ------------------------------------------------------------------

def test_graph6_roundtrip_example():
    g = parse_graph6("D?{")
    assert g.n == 5
    assert parse_graph6(to_graph6(g)) == g


def test_graph6_complete_graph():
    g = parse_graph6(to_graph6(Graph.complete(3)))
    assert (g.n, g.num_edges) == (3, 3)


def test_order4_canonical_strings_pairwise_nonisomorphic():
    cat = generate_nonisomorphic(4)
    parsed = [parse_graph6(gid) for gid in cat.ids]
    for a, b in itertools.combinations(parsed, 2):
        assert not is_isomorphic(a, b)


@given(graphs(max_n=9))
def test_graph6_roundtrip(g):
    assert parse_graph6(to_graph6(g)) == g


def test_graph6_long_header():
    g = Graph.path(63)
    text = to_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


@pytest.mark.parametrize(
    "text, offset",
    [("", 0), ("D?", 2), ("D?{{", 3), ("A!", 1), ("D?|", 2)],
)
def test_graph6_errors_name_offset(text, offset):
    with pytest.raises(ParseError) as err:
        parse_graph6(text)
    assert err.value.offset == offset
    assert f"byte {offset}" in str(err.value)


def test_graph6_too_many_vertices():
    with pytest.raises((ParseError, CapabilityError)):
        parse_graph6("~??~" + "?" * 2000)


def test_edge_list_format():
    g = parse_edge_list("4; 0 1; 1 2; 2 3")
    assert g == Graph.path(4)
    assert parse_graph(to_edge_list(g)) == g
    with pytest.raises(ParseError):
        parse_edge_list("3; 0 5")


def test_read_graphs_reports_line():
    lines = [">>graph6<<", "# comment", "", "A_", "bad!"]
    it = read_graphs(lines)
    assert next(it) == (4, Graph.complete(2))
    with pytest.raises(ParseError, match="line 5"):
        next(it)


def test_load_catalog_collapses_isomorphic():
    cat = load_catalog(["CL", to_graph6(Graph.path(4).relabel([2, 0, 3, 1])), "C~"])
    assert len(cat) == 2


# complement --------------------------------------------------------------

def test_complement_examples():
    assert complement(Graph.complete(4)) == Graph.empty(4)
    assert complement(Graph.path(3)) == Graph.from_edges(3, [(0, 2)])
    c5 = Graph.cycle(5)
    assert complement(complement(c5)) == c5


def test_complement_keeps_weights():
    g = Graph.path(3).with_weights([1, 2, 3])
    assert complement(g).weights == (1, 2, 3)


@given(graphs(max_n=8))
def test_complement_involution(g):
    h = complement(g)
    assert complement(h) == g
    for u, v in itertools.combinations(range(g.n), 2):
        assert h.has_edge(u, v) != g.has_edge(u, v)


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph.path(2).with_weights([1, 0])


# canonical labels --------------------------------------------------------

def test_canonical_label_relabeling():
    a = Graph.path(4)
    b = Graph.from_edges(4, [(2, 0), (0, 3), (3, 1)])
    assert canonical_label(a) == canonical_label(b)


def test_canonical_labels_distinct_on_order4():
    labels = [canonical_label(e.graph) for e in generate_nonisomorphic(4)]
    assert len(set(labels)) == 11


@settings(max_examples=60)
@given(graphs(max_n=6), st.randoms(use_true_random=False))
def test_canonical_label_matches_isomorphism(g, rnd):
    order = list(range(g.n))
    rnd.shuffle(order)
    assert canonical_label(g.relabel(order)) == canonical_label(g)
    assert canonical_label(complement(complement(g))) == canonical_label(g)


@settings(max_examples=60)
@given(graphs(min_n=4, max_n=6), graphs(min_n=4, max_n=6))
def test_canonical_label_agrees_with_networkx(a, b):
    import networkx as nx

    same = a.n == b.n and nx.is_isomorphic(to_nx(a), to_nx(b))
    assert (canonical_label(a) == canonical_label(b)) == same


def test_canonical_label_cap():
    with pytest.raises(CapabilityError):
        canonical_label(Graph.path(11))


# stable sets and cliques -------------------------------------------------

def test_stable_set_examples():
    assert enumerate_stable_sets(Graph.complete(4), 2) == []
    assert len(enumerate_stable_sets(Graph.empty(4), 2)) == 6
    assert enumerate_stable_sets(Graph.path(3), 2) == [(0, 2)]


@given(graphs(max_n=6), st.integers(1, 6))
def test_stable_sets_are_complement_cliques(g, size):
    assert enumerate_stable_sets(g, size) == enumerate_cliques(complement(g), size)


@given(graphs(max_n=7), st.integers(1, 7))
def test_stable_sets_brute_force(g, size):
    want = [
        c for c in itertools.combinations(range(g.n), size)
        if not any(g.has_edge(u, v) for u, v in itertools.combinations(c, 2))
    ]
    assert enumerate_stable_sets(g, size) == want


# induced copies ----------------------------------------------------------

def test_induced_examples():
    assert count_induced_copies(Graph.complete(5), Graph.complete(3)) == 10
    assert count_induced_copies(Graph.cycle(5), Graph.path(4)) == 5
    assert count_induced_copies(Graph.cycle(5), alias_graph("claw")) == 0
    assert brute_induced(Graph.cycle(5), Graph.path(4)) == 5


@settings(max_examples=40)
@given(graphs(min_n=3, max_n=7), st.integers(1, 5))
def test_induced_counts_sum_to_binomial(g, k):
    from math import comb

    total = sum(count_induced_copies(g, e.graph) for e in generate_nonisomorphic(k))
    assert total == comb(g.n, k)


@settings(max_examples=30)
@given(graphs(min_n=4, max_n=7), st.integers(0, 10))
def test_induced_counts_against_networkx(g, pick):
    cat = generate_nonisomorphic(4)
    h = cat[pick].graph
    assert count_induced_copies(g, h) == brute_induced(g, h)


# generation --------------------------------------------------------------

def test_catalog_sizes():
    assert [len(generate_nonisomorphic(n)) for n in range(1, 6)] == [1, 2, 4, 11, 34]


def test_catalog_order4_aliases():
    cat = generate_nonisomorphic(4)
    assert sorted(e.name for e in cat) == sorted(
        ["4v", "e+2v", "P3+v", "2e", "claw", "K3+v", "P4", "paw", "C4", "K4-e", "K4"]
    )
    assert cat.id_of("diamond") == cat.id_of("K4-e")


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_generation_matches_filter(n):
    assert generate_nonisomorphic(n).ids == generate_by_filter(n).ids


def test_generation_order6_against_networkx_atlas():
    import networkx as nx

    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 6]
    ours = generate_nonisomorphic(6)
    assert len(ours) == len(atlas) == 156
    labels = {canonical_label(Graph.from_edges(6, h.edges())) for h in atlas}
    assert labels == set(ours.ids)


def test_generation_cap():
    with pytest.raises(CapabilityError):
        generate_nonisomorphic(8)


def test_catalog_closed_under_complement():
    cat = generate_nonisomorphic(5)
    flip = cat.complement_ids()
    assert set(flip.values()) == set(cat.ids)
    assert all(flip[flip[i]] == i for i in cat.ids)


# clique selections -------------------------------------------------------

def test_clique_selection_examples():
    assert count_covering_clique_selections(Graph.complete(4), [(2, 5)]) == 6
    assert count_covering_clique_selections(Graph.complete(3), [(3, 1)]) == 1
    assert count_covering_clique_selections(Graph.path(4), [(2, 2)]) == 1


def _spanning_edge_sets(g, j):
    verts = g.vertex_mask
    count = 0
    for chosen in itertools.combinations(g.edges(), j):
        covered = 0
        for u, v in chosen:
            covered |= (1 << u) | (1 << v)
        count += covered == verts
    return count


@settings(max_examples=60)
@given(graphs(max_n=6), st.integers(0, 7))
def test_edge_selections_match_spanning_subgraphs(g, j):
    want = _spanning_edge_sets(g, j) if j else 0
    assert count_covering_clique_selections(g, [(2, j)]) == want


@settings(max_examples=40)
@given(graphs(max_n=6), st.integers(0, 3), st.integers(0, 2))
def test_clique_selection_census_brute_force(g, a, b):
    census = CliqueSelectionCensus(g, {2: 3, 3: 2})
    edges, tris = clique_masks(g, 2), clique_masks(g, 3)
    for mask in range(1 << g.n):
        want = 0
        for es in itertools.combinations(edges, a):
            for ts in itertools.combinations(tris, b):
                u = 0
                for m in es + ts:
                    u |= m
                want += u == mask
        assert census.with_union(mask, {2: a, 3: b}) == want


# random ------------------------------------------------------------------

def test_seeded_generators_are_reproducible():
    assert seeded_graphs(5, 8, seed=3) == seeded_graphs(5, 8, seed=3)
    trees = seeded_trees(20, 6, 12, seed=0)
    assert trees == seeded_trees(20, 6, 12, seed=0)
    assert all(t.is_tree() and 6 <= t.n <= 12 for t in trees)
