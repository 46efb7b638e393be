"""Exact partition-function toolkit: enumeration, Euler's recurrence, level sums, q-binomials."""

from .classic import EstimateReport, PartitionTable, build_table, hr_leading_estimate, p_euler
from .closed_forms import ResidueClassForm, s2_closed, s3_closed
from .levels import (
    LevelBreakdown,
    LevelIndexVector,
    index_vectors,
    level_series,
    p_combinatorial,
    s_inner,
    s_level,
)
from .partitions import (
    LIMITS,
    CapExceededError,
    Partition,
    PartitionConstraint,
    conjugate,
    count_restricted,
    durfee_side,
    enumerate_partitions,
)
from .qbinomial import QPolynomial, qbinom

__version__ = "0.1.0"
