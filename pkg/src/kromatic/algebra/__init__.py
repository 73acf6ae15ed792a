"""Partitions and exact rational linear algebra."""
from .linalg import (
    Elimination,
    RationalMatrix,
    Solution,
    eliminate,
    rank,
    residual_of,
    rref,
    solve_exact,
    solve_with,
)
from .partitions import Partition, partitions_bounded, partitions_of
