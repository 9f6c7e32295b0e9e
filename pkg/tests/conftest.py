import os
from functools import lru_cache

import pytest

SLOW_ENABLED = os.environ.get("NCARDPOKER_SLOW", "") not in ("", "0")


def reference_partition_count(total: int, max_parts: int, max_value: int) -> int:
    """Independent count of multisets of <= max_parts positive integers, each
    <= max_value, summing to total. Memoized recurrence on (remaining sum,
    parts left, value cap); counts without materializing anything, so it
    shares no code with the enumerator it checks.
    """

    @lru_cache(maxsize=None)
    def count(remaining: int, parts_left: int, cap: int) -> int:
        if remaining == 0:
            return 1
        if parts_left == 0:
            return 0
        return sum(
            count(remaining - value, parts_left - 1, value)
            for value in range(1, min(cap, remaining) + 1)
        )

    return count(total, max_parts, max_value)


@pytest.fixture(scope="session")
def golden_table_path():
    return os.path.join(os.path.dirname(__file__), "data", "counts_5_52.csv")
