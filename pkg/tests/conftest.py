import itertools

import networkx as nx
from hypothesis import strategies as st

from kromatic.graphs import Graph


@st.composite
def graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def brute_induced(g, h):
    """Induced copies of h in g by networkx isomorphism on every subset."""
    hx = to_nx(h)
    gx = to_nx(g)
    return sum(
        1 for s in itertools.combinations(range(g.n), h.n) if nx.is_isomorphic(gx.subgraph(s), hx)
    )


def star_plus(h, k):
    s = Graph.star(h)
    return s.disjoint_union(Graph.empty(k)) if k else s


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[k])
