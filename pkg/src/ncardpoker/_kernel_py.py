"""Pure-Python enumeration and sampling kernel.

Fallback for when the compiled extension is unavailable; same contract and
bit-identical results as ncardpoker._speedups, just slower. Card positions
index into the sorted list of cards present in deck_mask; card i of the full
deck has suit i // 13 and rank i % 13.
"""

from __future__ import annotations

from .straights import STRAIGHT_WINDOWS

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

CATEGORY_IDS = {"straight": 0, "flush": 1, "full_house": 2}


def count_categories(
    n: int, deck_mask: int, first_lo: int, first_hi: int
) -> tuple[int, int, int, int]:
    """Count hands by exhaustive enumeration, in lexicographic position order.

    Returns (total, straight, flush, full_house) over all n-card subsets of
    the deck whose lowest card position lies in [first_lo, first_hi). Per-suit
    and per-rank counters are updated incrementally on card add/remove instead
    of being recomputed per hand.
    """
    if n < 1:
        raise ValueError("count_categories requires n >= 1")
    cards = [c for c in range(52) if deck_mask >> c & 1]
    m = len(cards)
    suit_of = [c // 13 for c in cards]
    rank_of = [c % 13 for c in cards]
    windows = STRAIGHT_WINDOWS

    suit_count = [0, 0, 0, 0]
    rank_count = [0] * 13
    # pairs_up = ranks holding >= 2 cards, trips_up = ranks holding >= 3,
    # flush_suits = suits holding >= 5, rank_mask = ranks present at all.
    pairs_up = trips_up = flush_suits = rank_mask = 0
    n_total = n_straight = n_flush = n_full = 0

    def descend(start: int, remaining: int) -> None:
        nonlocal pairs_up, trips_up, flush_suits, rank_mask
        nonlocal n_total, n_straight, n_flush, n_full
        if remaining == 0:
            n_total += 1
            for w in windows:
                if rank_mask & w == w:
                    n_straight += 1
                    break
            if flush_suits:
                n_flush += 1
            if trips_up and pairs_up >= 2:
                n_full += 1
            return
        for pos in range(start, m - remaining + 1):
            s = suit_of[pos]
            r = rank_of[pos]
            suit_count[s] += 1
            if suit_count[s] == 5:
                flush_suits += 1
            rank_count[r] += 1
            rc = rank_count[r]
            if rc == 1:
                rank_mask |= 1 << r
            elif rc == 2:
                pairs_up += 1
            elif rc == 3:
                trips_up += 1
            descend(pos + 1, remaining - 1)
            if suit_count[s] == 5:
                flush_suits -= 1
            suit_count[s] -= 1
            if rc == 1:
                rank_mask &= ~(1 << r)
            elif rc == 2:
                pairs_up -= 1
            elif rc == 3:
                trips_up -= 1
            rank_count[r] -= 1

    hi = min(first_hi, m - n + 1)
    for first in range(first_lo, hi):
        # The first card added can only take its suit to 1 and its rank to 1,
        # so no pair/trip/flush transitions are possible here.
        s = suit_of[first]
        r = rank_of[first]
        suit_count[s] += 1
        rank_count[r] += 1
        rank_mask |= 1 << r
        descend(first + 1, n - 1)
        suit_count[s] -= 1
        rank_count[r] -= 1
        rank_mask &= ~(1 << r)

    return (n_total, n_straight, n_flush, n_full)


class SplitMix64:
    """The splitmix64 generator (Steele, Lea, Vigna); 64-bit state, one
    multiply-xorshift mix per output. Chosen for trivially portable
    bit-exactness between this module and the compiled kernel."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform draw from [0, bound) by masked rejection (no modulo bias)."""
        mask = (1 << (bound - 1).bit_length()) - 1
        while True:
            r = self.next_u64() & mask
            if r < bound:
                return r


def sample_hits(n: int, category_id: int, samples: int, seed: int) -> int:
    """Hits for one category over `samples` uniform n-card hands.

    Each hand is drawn by a partial Fisher-Yates shuffle of a persistent
    52-card array (the array state carries across samples; every draw is
    still uniform and the whole run is a pure function of the seed).
    """
    if not 0 <= n <= 52:
        raise ValueError(f"hand size must be in [0, 52], got {n}")
    if category_id not in (0, 1, 2):
        raise ValueError(f"category_id must be 0, 1 or 2, got {category_id}")
    rng = SplitMix64(seed)
    deck = list(range(52))
    windows = STRAIGHT_WINDOWS
    hits = 0
    for _ in range(samples):
        for i in range(n):
            j = i + rng.below(52 - i)
            deck[i], deck[j] = deck[j], deck[i]
        if category_id == 0:
            rank_mask = 0
            for i in range(n):
                rank_mask |= 1 << (deck[i] % 13)
            for w in windows:
                if rank_mask & w == w:
                    hits += 1
                    break
        elif category_id == 1:
            suit_count = [0, 0, 0, 0]
            for i in range(n):
                s = deck[i] // 13
                suit_count[s] += 1
                if suit_count[s] == 5:
                    hits += 1
                    break
        else:
            rank_count = [0] * 13
            for i in range(n):
                rank_count[deck[i] % 13] += 1
            pairs_up = trips_up = 0
            for rc in rank_count:
                if rc >= 2:
                    pairs_up += 1
                    if rc >= 3:
                        trips_up += 1
            if trips_up and pairs_up >= 2:
                hits += 1
    return hits
