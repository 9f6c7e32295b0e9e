"""Exact integer combinatorics: binomials, multiset arrangements, bounded partitions.

Everything here is exact; counts are plain Python ints (arbitrary precision),
so intermediate products can never overflow or round.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

DECK_SIZE = 52


def binomial(n: int, k: int) -> int:
    """C(n, k) for 0 <= n <= 52; returns 0 for k outside [0, n].

    The zero convention (rather than an error) keeps complement sums
    over partitions free of special cases.
    """
    if not 0 <= n <= DECK_SIZE:
        raise ValueError(f"n must be in [0, {DECK_SIZE}], got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def arrangements(parts: Iterable[int]) -> int:
    """Number of distinct orderings of the nonzero elements of a multiset.

    This is the multinomial coefficient len(parts)! / prod(multiplicity!).

    >>> arrangements((3, 2, 2))
    3
    >>> arrangements((1, 2, 3, 4))
    24
    """
    values = [p for p in parts if p != 0]
    count = math.factorial(len(values))
    for multiplicity in Counter(values).values():
        count //= math.factorial(multiplicity)
    return count


@dataclass(frozen=True)
class BoundedPartition:
    """A multiset of positive integers with caps on part count and part value.

    Zero parts are dropped at construction and the remaining parts are stored
    sorted descending, so two equal multisets always compare equal. The caps
    and the target sum travel with the partition and are enforced.
    """

    parts: tuple[int, ...]
    target_sum: int
    max_parts: int
    max_value: int

    def __post_init__(self):
        cleaned = tuple(sorted((p for p in self.parts if p != 0), reverse=True))
        object.__setattr__(self, "parts", cleaned)
        if self.max_parts < 1 or self.max_value < 1:
            raise ValueError("max_parts and max_value must be at least 1")
        if any(p < 0 for p in cleaned):
            raise ValueError(f"parts must be nonnegative, got {cleaned}")
        if len(cleaned) > self.max_parts:
            raise ValueError(f"{len(cleaned)} parts exceed max_parts={self.max_parts}")
        if cleaned and cleaned[0] > self.max_value:
            raise ValueError(f"part {cleaned[0]} exceeds max_value={self.max_value}")
        if sum(cleaned) != self.target_sum:
            raise ValueError(f"parts sum to {sum(cleaned)}, expected {self.target_sum}")

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def arrangements(self) -> int:
        """Distinct orderings of this partition's parts."""
        return arrangements(self.parts)


def enumerate_partitions(
    target_sum: int, max_parts: int, max_value: int
) -> Iterator[BoundedPartition]:
    """Yield every multiset of at most max_parts positive integers, each at
    most max_value, summing to target_sum.

    Generation is descending-first with the value cap threaded down the
    recursion, so each partition appears exactly once, in a deterministic
    order (largest first part first). Yields nothing when the sum is not
    reachable; target_sum == 0 yields the single empty partition.
    """
    if target_sum < 0:
        raise ValueError(f"target_sum must be nonnegative, got {target_sum}")
    if max_parts < 1 or max_value < 1:
        raise ValueError("max_parts and max_value must be at least 1")

    prefix: list[int] = []

    def descend(remaining: int, parts_left: int, cap: int) -> Iterator[BoundedPartition]:
        if remaining == 0:
            yield BoundedPartition(tuple(prefix), target_sum, max_parts, max_value)
            return
        if parts_left == 0:
            return
        for value in range(min(cap, remaining), 0, -1):
            prefix.append(value)
            yield from descend(remaining - value, parts_left - 1, value)
            prefix.pop()

    yield from descend(target_sum, max_parts, max_value)
