"""Graph representation, text formats, canonical labels and exhaustive counting."""
from .canon import canonical_form, canonical_label, canonical_order, is_isomorphic
from .catalog import (
    GENERATION_CAP,
    CatalogEntry,
    GraphCatalog,
    alias_graph,
    aliases_of,
    generate_by_filter,
    generate_nonisomorphic,
    graph_id,
    load_catalog,
)
from .core import MAX_VERTICES, ORACLE_CAP, Graph, complement, iter_bits, popcount
from .counting import (
    CliqueSelectionCensus,
    clique_masks,
    count_covering_clique_selections,
    count_induced_copies,
    enumerate_cliques,
    enumerate_stable_sets,
    independence_number,
    induced_census,
    stable_set_masks,
)
from .io import (
    parse_edge_list,
    parse_graph,
    parse_graph6,
    read_graphs,
    to_edge_list,
    to_graph6,
    write_graphs,
)
from .random import random_graph, random_tree, seeded_graphs, seeded_trees
