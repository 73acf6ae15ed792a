"""Kromatic symmetric functions of graphs and subgraph-count recovery."""
from .algebra import Partition, RationalMatrix, partitions_bounded, rref, solve_exact
from .covers import CoverSpec, cover_count, cover_count_oracle, vertex_count
from .engine import (
    MBarVector,
    MonomialExpansion,
    classical_chromatic,
    fingerprint,
    kromatic_truncated,
    mbar_coefficient,
    mbar_to_monomial,
    mbar_vector,
)
from .graphs import Graph, complement, generate_nonisomorphic, parse_graph6, to_graph6
from .recovery import (
    SubgraphCountReport,
    order4_recover,
    order5_recover,
    order_leq3_counts,
    star_recover,
    tree_recover,
)
from .scan import ScanResult, scan

__version__ = "0.1.0"
