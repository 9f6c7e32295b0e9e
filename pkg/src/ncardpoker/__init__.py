"""Exact combinatorics of n-card poker hands from a standard 52-card deck.

Counts, exact rational probabilities, and certainty thresholds for hands
containing a straight, a flush, or a full house, for any hand size up to the
whole deck, plus an independent enumeration / Monte Carlo oracle and a CLI.
"""

__version__ = "0.1.0"

from .combinatorics import BoundedPartition, arrangements, binomial, enumerate_partitions
from .counting import (
    CATEGORIES,
    ExactProbability,
    count_category,
    count_flush,
    count_full_house,
    count_straight,
    hands_with_suit_split,
    probability,
    total_hands,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .oracle import (
    SampleEstimate,
    contains_flush,
    contains_full_house,
    contains_straight,
    exhaustive_count,
    exhaustive_counts,
    make_hand,
    monte_carlo,
)
from .straights import (
    STRAIGHT_RANK_SET_COUNTS,
    STRAIGHT_WINDOWS,
    ConsistencyError,
    contains_straight_ranks,
    straight_rank_sets,
    straight_rank_sets_bruteforce,
)
from .table import CountsTable, CrossoverReport, TableRow, build_table, emit, find_crossover
from .verify import VerificationReport, run_verification

__all__ = [
    "BoundedPartition",
    "CATEGORIES",
    "ConsistencyError",
    "CountsTable",
    "CrossoverReport",
    "ExactProbability",
    "KERNEL_BACKEND",
    "SampleEstimate",
    "STRAIGHT_RANK_SET_COUNTS",
    "STRAIGHT_WINDOWS",
    "TableRow",
    "VerificationReport",
    "arrangements",
    "binomial",
    "build_table",
    "contains_flush",
    "contains_full_house",
    "contains_straight",
    "contains_straight_ranks",
    "count_category",
    "count_flush",
    "count_full_house",
    "count_straight",
    "emit",
    "enumerate_partitions",
    "exhaustive_count",
    "exhaustive_counts",
    "find_crossover",
    "hands_with_suit_split",
    "make_hand",
    "monte_carlo",
    "probability",
    "run_verification",
    "straight_rank_sets",
    "straight_rank_sets_bruteforce",
    "total_hands",
]
