"""Straight detection at the rank level.

Ranks are 1..13 (1 = Ace, 11 = Jack, 12 = Queen, 13 = King) and a rank set
is a 13-bit mask with bit i-1 for rank i. The Ace is stored once; its high
role exists only through the Ten-to-Ace window, which avoids a 14-rank
representation and duplicate-ace bugs.
"""

from __future__ import annotations

from typing import Iterable

RANK_COUNT = 13
ALL_RANKS = (1 << RANK_COUNT) - 1


def rank_mask(ranks: Iterable[int]) -> int:
    """Build a 13-bit membership mask from ranks in 1..13."""
    mask = 0
    for rank in ranks:
        if not 1 <= rank <= RANK_COUNT:
            raise ValueError(f"rank must be in 1..13, got {rank}")
        mask |= 1 << (rank - 1)
    return mask


# The 10 five-rank windows that count as a straight: A-2-3-4-5 (the wheel),
# 2-3-4-5-6, ... 9-10-J-Q-K, and 10-J-Q-K-A.
STRAIGHT_WINDOWS: tuple[int, ...] = tuple(
    rank_mask(range(low, low + 5)) for low in range(1, 10)
) + (rank_mask((10, 11, 12, 13, 1)),)

# Number of k-rank subsets (out of the 13 ranks) that contain a straight,
# indexed by k = 0..13. Cross-checked against brute force over all 8192
# subsets before first use; see straight_rank_sets().
STRAIGHT_RANK_SET_COUNTS: tuple[int, ...] = (
    0, 0, 0, 0, 0, 10, 71, 217, 371, 384, 234, 77, 13, 1,
)


class ConsistencyError(RuntimeError):
    """A hardcoded table disagrees with its independent recomputation."""


def contains_straight_ranks(ranks: int) -> bool:
    """True iff the rank mask covers at least one straight window."""
    for window in STRAIGHT_WINDOWS:
        if ranks & window == window:
            return True
    return False


def straight_rank_sets_bruteforce(k: int) -> int:
    """Count k-rank subsets containing a straight by scanning all 2**13 masks.

    Deliberately naive: this is the ground truth the hardcoded
    STRAIGHT_RANK_SET_COUNTS table is checked against.
    """
    if not 0 <= k <= RANK_COUNT:
        raise ValueError(f"k must be in 0..13, got {k}")
    return _bruteforce_counts()[k]


def _bruteforce_counts() -> tuple[int, ...]:
    counts = [0] * (RANK_COUNT + 1)
    for mask in range(ALL_RANKS + 1):
        if contains_straight_ranks(mask):
            counts[mask.bit_count()] += 1
    return tuple(counts)


def validate_rank_set_table(table: tuple[int, ...] = STRAIGHT_RANK_SET_COUNTS) -> None:
    """Raise ConsistencyError unless the table matches brute force for every k."""
    if len(table) != RANK_COUNT + 1:
        raise ConsistencyError(
            f"table must have {RANK_COUNT + 1} entries (k = 0..13), got {len(table)}"
        )
    reference = _bruteforce_counts()
    mismatches = [
        (k, table[k], reference[k])
        for k in range(RANK_COUNT + 1)
        if table[k] != reference[k]
    ]
    if mismatches:
        detail = ", ".join(
            f"k={k}: table={t} bruteforce={b}" for k, t, b in mismatches
        )
        raise ConsistencyError(f"straight rank-set table mismatch: {detail}")


_table_validated = False


def straight_rank_sets(k: int) -> int:
    """Number of k-rank subsets that contain a straight, from the fixed table.

    The table is checked against straight_rank_sets_bruteforce once per
    process; a mismatch (an implementation bug) raises ConsistencyError
    rather than serving bad values.
    """
    global _table_validated
    if not 0 <= k <= RANK_COUNT:
        raise ValueError(f"k must be in 0..13, got {k}")
    if not _table_validated:
        validate_rank_set_table()
        _table_validated = True
    return STRAIGHT_RANK_SET_COUNTS[k]
