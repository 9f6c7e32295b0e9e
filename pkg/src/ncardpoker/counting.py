"""Exact counts of n-card hands containing a straight, flush, or full house.

Counting is by containment: a hand counts toward a category if it contains
that combination anywhere among its n cards, even when it also contains a
stronger one. Categories therefore overlap and their counts do not sum to
anything meaningful.

Each counter reduces the hand space to a bounded partition sum:

* flush: complement over flush-free per-suit splits (at most 4 parts, each
  at most 4 since a 5-card suit would be a flush),
* full house: per-rank splits (at most 13 parts, each at most 4) whose
  largest part is >= 3 and second largest is >= 2,
* straight: all per-rank splits, weighted by how many choices of the
  distinct ranks contain a straight window.

A split with parts (r_1, .., r_m) accounts for
``C(slots, m) * arrangements * prod(C(choices, r_i))`` hands: pick which
suits (or ranks) carry cards, order the part sizes among them, then pick
the actual cards within each.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .combinatorics import DECK_SIZE, BoundedPartition, arrangements, binomial, enumerate_partitions
from .straights import straight_rank_sets

SUIT_COUNT = 4
RANK_COUNT = 13

# The partition sums hit these constantly; small tuples beat recomputation.
_CHOOSE_SUIT = tuple(binomial(SUIT_COUNT, k) for k in range(SUIT_COUNT + 1))
_CHOOSE_RANK = tuple(binomial(RANK_COUNT, k) for k in range(RANK_COUNT + 1))
_CHOOSE_DECK = tuple(binomial(DECK_SIZE, k) for k in range(DECK_SIZE + 1))

CATEGORIES = ("straight", "flush", "full_house")


def check_hand_size(n: int) -> int:
    """Validate an n in [0, 52] (sizes below 5 are legal and trivially countable)."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"hand size must be an int, got {type(n).__name__}")
    if not 0 <= n <= DECK_SIZE:
        raise ValueError(f"hand size must be in [0, {DECK_SIZE}], got {n}")
    return n


def total_hands(n: int) -> int:
    """C(52, n), the number of n-card hands."""
    return _CHOOSE_DECK[check_hand_size(n)]


def hands_with_suit_split(split: BoundedPartition) -> int:
    """Hands whose multiset of per-suit card counts equals the given split.

    C(4, m) ways to pick which m suits hold cards, arrangements(split) ways
    to deal the part sizes onto those suits, then C(13, r) card choices
    within each suit.
    """
    parts = tuple(split)
    if len(parts) > SUIT_COUNT or any(r > RANK_COUNT for r in parts):
        raise ValueError(f"not a per-suit split of a 52-card deck: {parts}")
    return (
        _CHOOSE_SUIT[len(parts)]
        * arrangements(parts)
        * prod(_CHOOSE_RANK[r] for r in parts)
    )


def _rank_split_ways(parts: tuple[int, ...]) -> int:
    """arrangements * prod C(4, t): ways to realize a per-rank split once the
    set of occupied ranks is fixed."""
    return arrangements(parts) * prod(_CHOOSE_SUIT[t] for t in parts)


def count_flush(n: int) -> int:
    """Hands containing a flush (5 or more cards of one suit).

    Counted as the complement of flush-free hands; a hand is flush-free
    exactly when every suit holds at most 4 cards, so the complement sum
    runs over splits with parts capped at 4 and is empty for n >= 17
    (pigeonhole: four suits of four cards max out at 16).
    """
    check_hand_size(n)
    flush_free = sum(
        hands_with_suit_split(split)
        for split in enumerate_partitions(n, SUIT_COUNT, 4)
    )
    return total_hands(n) - flush_free


def count_full_house(n: int) -> int:
    """Hands containing a full house (three of one rank plus a pair of another).

    Sums over per-rank splits whose largest part is >= 3 and second largest
    is >= 2. Note this excludes four of a kind with only singletons beside
    it: the pair must come from a different rank than the trips.
    """
    check_hand_size(n)
    total = 0
    for split in enumerate_partitions(n, RANK_COUNT, SUIT_COUNT):
        parts = split.parts
        if len(parts) >= 2 and parts[0] >= 3 and parts[1] >= 2:
            total += _CHOOSE_RANK[len(parts)] * _rank_split_ways(parts)
    return total


def count_straight(n: int) -> int:
    """Hands containing a straight (5 sequential ranks, Ace low or high).

    Sums over all per-rank splits; a split occupying k distinct ranks
    contributes for each of the straight_rank_sets(k) ways those k ranks can
    include a straight window.
    """
    check_hand_size(n)
    total = 0
    for split in enumerate_partitions(n, RANK_COUNT, SUIT_COUNT):
        parts = split.parts
        total += straight_rank_sets(len(parts)) * _rank_split_ways(parts)
    return total


_COUNTERS = {
    "straight": count_straight,
    "flush": count_flush,
    "full_house": count_full_house,
}


def count_category(n: int, category: str) -> int:
    """Dispatch to the counter for one of 'straight', 'flush', 'full_house'."""
    try:
        counter = _COUNTERS[category]
    except KeyError:
        raise ValueError(f"unknown category {category!r}, expected one of {CATEGORIES}")
    return counter(n)


@dataclass(frozen=True)
class ExactProbability:
    """An exact probability count/total with decimal rendering on demand."""

    count: int
    total: int

    def __post_init__(self):
        if self.total < 1:
            raise ValueError(f"total must be positive, got {self.total}")
        if not 0 <= self.count <= self.total:
            raise ValueError(f"count {self.count} outside [0, {self.total}]")

    @property
    def fraction(self) -> Fraction:
        """The reduced exact fraction."""
        return Fraction(self.count, self.total)

    def decimal(self, digits: int = 12) -> str:
        """Decimal rendering at the given number of significant digits,
        rounded half to even."""
        return decimal_string(self.fraction, digits)

    def __float__(self) -> float:
        return self.count / self.total


def decimal_string(value: Fraction, digits: int = 12) -> str:
    """Render an exact fraction as a decimal with `digits` significant digits
    (round half to even)."""
    if digits < 1:
        raise ValueError(f"digits must be positive, got {digits}")
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = decimal.ROUND_HALF_EVEN
        rendered = decimal.Decimal(value.numerator) / decimal.Decimal(value.denominator)
    return str(rendered)


def probability(count: int, n: int) -> ExactProbability:
    """The exact probability count / C(52, n); rejects counts above the total."""
    total = total_hands(n)
    if not 0 <= count <= total:
        raise ValueError(f"count {count} outside [0, C(52,{n})={total}]")
    return ExactProbability(count, total)
