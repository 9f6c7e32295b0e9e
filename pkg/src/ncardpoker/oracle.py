"""Ground truth independent of the closed-form counters.

Hands are 52-bit masks over the deck; card index = (suit - 1) * 13 +
(rank - 1) with suits 1..4 and ranks 1..13 (Ace = 1). The predicates here
evaluate a hand directly, the exhaustive counter enumerates every C(52, n)
hand for small n, and the Monte Carlo sampler estimates containment
probabilities for hand sizes where enumeration is infeasible.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from . import kernels
from .counting import CATEGORIES, check_hand_size
from .straights import RANK_COUNT, contains_straight_ranks

SUIT_COUNT = 4
DECK_SIZE = 52
FULL_DECK = (1 << DECK_SIZE) - 1
SUIT_MASK = (1 << RANK_COUNT) - 1

RNG_ALGORITHM = "splitmix64"

DEFAULT_ENUMERATION_CAP = 7


def card_index(rank: int, suit: int) -> int:
    """Deck position of (rank, suit), ranks 1..13 (Ace = 1), suits 1..4."""
    if not 1 <= rank <= RANK_COUNT:
        raise ValueError(f"rank must be in 1..13, got {rank}")
    if not 1 <= suit <= SUIT_COUNT:
        raise ValueError(f"suit must be in 1..4, got {suit}")
    return (suit - 1) * RANK_COUNT + (rank - 1)


def make_hand(cards) -> int:
    """Hand mask from (rank, suit) pairs; duplicates rejected."""
    hand = 0
    for rank, suit in cards:
        bit = 1 << card_index(rank, suit)
        if hand & bit:
            raise ValueError(f"duplicate card (rank={rank}, suit={suit})")
        hand |= bit
    return hand


def hand_size(hand: int) -> int:
    return hand.bit_count()


def suit_ranks(hand: int, suit: int) -> int:
    """13-bit rank mask of one suit's cards within the hand."""
    if not 1 <= suit <= SUIT_COUNT:
        raise ValueError(f"suit must be in 1..4, got {suit}")
    return (hand >> (suit - 1) * RANK_COUNT) & SUIT_MASK


def rank_counts(hand: int) -> list[int]:
    """Cards held of each rank, indexed by rank - 1."""
    counts = [0] * RANK_COUNT
    for suit in range(1, SUIT_COUNT + 1):
        ranks = suit_ranks(hand, suit)
        while ranks:
            low = ranks & -ranks
            counts[low.bit_length() - 1] += 1
            ranks ^= low
    return counts


def contains_flush(hand: int) -> bool:
    """5 or more cards of one suit."""
    return any(
        suit_ranks(hand, suit).bit_count() >= 5 for suit in range(1, SUIT_COUNT + 1)
    )


def contains_full_house(hand: int) -> bool:
    """Some rank with 3+ cards and a different rank with 2+ cards."""
    pairs_up = trips_up = 0
    for count in rank_counts(hand):
        if count >= 2:
            pairs_up += 1
            if count >= 3:
                trips_up += 1
    return trips_up >= 1 and pairs_up >= 2


def contains_straight(hand: int) -> bool:
    """The hand's present ranks include 5 sequential ranks (Ace low or high)."""
    present = 0
    for suit in range(1, SUIT_COUNT + 1):
        present |= suit_ranks(hand, suit)
    return contains_straight_ranks(present)


PREDICATES = {
    "straight": contains_straight,
    "flush": contains_flush,
    "full_house": contains_full_house,
}


def _check_category(category: str) -> str:
    if category not in PREDICATES:
        raise ValueError(f"unknown category {category!r}, expected one of {CATEGORIES}")
    return category


def enumerate_hands(n: int, deck: int = FULL_DECK) -> Iterator[int]:
    """Yield every n-card subset of the deck mask exactly once, in
    lexicographic card-index order."""
    check_hand_size(n)
    cards = [c for c in range(DECK_SIZE) if deck >> c & 1]

    def descend(start: int, remaining: int, acc: int) -> Iterator[int]:
        if remaining == 0:
            yield acc
            return
        for pos in range(start, len(cards) - remaining + 1):
            yield from descend(pos + 1, remaining - 1, acc | 1 << cards[pos])

    yield from descend(0, n, 0)


def _worker_ranges(m: int, n: int, workers: int) -> list[tuple[int, int]]:
    """Split the first-card position space into one contiguous range per
    worker. Totals are sums of per-range counts, so any split gives
    bit-identical results."""
    hi = max(m - n + 1, 0)
    bounds = [round(i * hi / workers) for i in range(workers + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(workers)]


def exhaustive_counts(
    n: int,
    *,
    deck: int = FULL_DECK,
    workers: int = 1,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> dict[str, int]:
    """Exact counts {'total', 'straight', 'flush', 'full_house'} over every
    n-card subset of the deck, by exhaustive enumeration in one pass.

    Refuses n above `cap` (default 7, about 1.3e8 hands on a full deck);
    raise the cap explicitly if you really mean it.
    """
    check_hand_size(n)
    if n > cap:
        raise ValueError(
            f"exhaustive enumeration of n={n} exceeds the cap of {cap}; "
            f"pass cap={n} to override"
        )
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    m = (deck & FULL_DECK).bit_count()
    if n == 0:
        return {"total": 1, "straight": 0, "flush": 0, "full_house": 0}
    if n > m:
        return {"total": 0, "straight": 0, "flush": 0, "full_house": 0}

    ranges = _worker_ranges(m, n, workers)
    if workers == 1:
        parts = [kernels.count_categories(n, deck, 0, m)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(lambda r: kernels.count_categories(n, deck, r[0], r[1]), ranges)
            )
    total, straight, flush, full_house = (sum(col) for col in zip(*parts))
    return {
        "total": total,
        "straight": straight,
        "flush": flush,
        "full_house": full_house,
    }


def exhaustive_count(
    n: int,
    category: str,
    *,
    deck: int = FULL_DECK,
    workers: int = 1,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> int:
    """Exact number of n-card hands satisfying one category predicate."""
    _check_category(category)
    return exhaustive_counts(n, deck=deck, workers=workers, cap=cap)[category]


@dataclass(frozen=True)
class SampleEstimate:
    """A seeded Monte Carlo estimate of a containment probability."""

    hits: int
    samples: int
    seed: int
    category: str
    n: int
    workers: int = 1
    rng_algorithm: str = RNG_ALGORITHM

    def __post_init__(self):
        if not 0 <= self.hits <= self.samples:
            raise ValueError(f"hits {self.hits} outside [0, {self.samples}]")

    @property
    def point(self) -> Fraction:
        """The point estimate hits/samples, exact."""
        return Fraction(self.hits, self.samples)

    @property
    def stderr(self) -> float:
        """Binomial standard error sqrt(p * (1 - p) / samples)."""
        p = self.hits / self.samples
        return math.sqrt(p * (1.0 - p) / self.samples)


def monte_carlo(
    n: int, category: str, samples: int, seed: int, *, workers: int = 1
) -> SampleEstimate:
    """Estimate the probability of a category over uniform n-card hands.

    Hands are drawn by seeded partial Fisher-Yates over the 52 cards. Each
    worker runs its own splitmix64 substream whose seed is drawn from a
    master splitmix64 stream seeded with `seed`, so results are bit-identical
    for identical (n, category, samples, seed, workers).
    """
    check_hand_size(n)
    _check_category(category)
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    category_id = kernels.CATEGORY_IDS[category]

    master = _kernel_seed_stream(seed)
    worker_seeds = [next(master) for _ in range(workers)]
    base, extra = divmod(samples, workers)
    shares = [base + (1 if w < extra else 0) for w in range(workers)]

    if workers == 1:
        hits = kernels.sample_hits(n, category_id, shares[0], worker_seeds[0])
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hits = sum(
                pool.map(
                    lambda ws: kernels.sample_hits(n, category_id, ws[0], ws[1]),
                    zip(shares, worker_seeds),
                )
            )
    return SampleEstimate(
        hits=hits,
        samples=samples,
        seed=seed,
        category=category,
        n=n,
        workers=workers,
    )


def _kernel_seed_stream(seed: int) -> Iterator[int]:
    from ._kernel_py import SplitMix64

    rng = SplitMix64(seed)
    while True:
        yield rng.next_u64()
