"""Induced-subgraph counts recovered from the augmented-monomial vector."""
from .report import SubgraphCountReport
from .systems import (
    COVER_ROWS,
    ComplementCounts,
    LevelSystem,
    level_system,
    order4_recover,
    order5_recover,
    recover_order,
)
from .small import SmallCounts, order_leq3_counts
from .stars import clique_multiplicity, star_recover, star_system
from .trees import tree_recover
