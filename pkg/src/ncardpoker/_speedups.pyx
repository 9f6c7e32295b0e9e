# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration and sampling kernel.

Bit-identical to ncardpoker._kernel_py; see that module for the contract.
Both hot loops run without the GIL so callers can fan out across threads.
"""

from libc.stdint cimport int64_t, uint64_t

CATEGORY_IDS = {"straight": 0, "flush": 1, "full_house": 2}

cdef uint64_t GOLDEN = 0x9E3779B97F4A7C15
cdef uint64_t MIX1 = 0xBF58476D1CE4E5B9
cdef uint64_t MIX2 = 0x94D049BB133111EB

# Five-rank straight windows over rank bits 0..12 (bit 0 = Ace): Ace-low
# through Nine-low, plus Ten-to-Ace.
cdef int[10] WINDOWS
cdef int _w
for _w in range(9):
    WINDOWS[_w] = 0b11111 << _w
WINDOWS[9] = (0b1111 << 9) | 1


cdef struct HandState:
    int suit_count[4]
    int rank_count[13]
    int pairs_up      # ranks holding >= 2 cards
    int trips_up      # ranks holding >= 3 cards
    int flush_suits   # suits holding >= 5 cards
    int rank_mask     # ranks present at all


cdef struct Tally:
    int64_t total
    int64_t straight
    int64_t flush
    int64_t full_house


cdef inline void _tally_leaf(HandState* st, Tally* out) noexcept nogil:
    cdef int i
    out.total += 1
    for i in range(10):
        if st.rank_mask & WINDOWS[i] == WINDOWS[i]:
            out.straight += 1
            break
    if st.flush_suits:
        out.flush += 1
    if st.trips_up and st.pairs_up >= 2:
        out.full_house += 1


cdef void _descend(int start, int remaining, int m,
                   const int* suit_of, const int* rank_of,
                   HandState* st, Tally* out) noexcept nogil:
    cdef int pos, s, r, rc
    if remaining == 0:
        _tally_leaf(st, out)
        return
    for pos in range(start, m - remaining + 1):
        s = suit_of[pos]
        r = rank_of[pos]
        st.suit_count[s] += 1
        if st.suit_count[s] == 5:
            st.flush_suits += 1
        st.rank_count[r] += 1
        rc = st.rank_count[r]
        if rc == 1:
            st.rank_mask |= 1 << r
        elif rc == 2:
            st.pairs_up += 1
        elif rc == 3:
            st.trips_up += 1
        _descend(pos + 1, remaining - 1, m, suit_of, rank_of, st, out)
        if st.suit_count[s] == 5:
            st.flush_suits -= 1
        st.suit_count[s] -= 1
        if rc == 1:
            st.rank_mask &= ~(1 << r)
        elif rc == 2:
            st.pairs_up -= 1
        elif rc == 3:
            st.trips_up -= 1
        st.rank_count[r] -= 1


def count_categories(int n, object deck_mask, int first_lo, int first_hi):
    """(total, straight, flush, full_house) over n-card subsets of deck_mask
    whose lowest card position lies in [first_lo, first_hi)."""
    if n < 1:
        raise ValueError("count_categories requires n >= 1")
    cdef uint64_t mask = <uint64_t> (int(deck_mask) & ((1 << 52) - 1))
    cdef int suit_of[52]
    cdef int rank_of[52]
    cdef int m = 0
    cdef int c
    for c in range(52):
        if mask >> c & 1:
            suit_of[m] = c // 13
            rank_of[m] = c % 13
            m += 1

    cdef HandState st
    cdef int i
    for i in range(4):
        st.suit_count[i] = 0
    for i in range(13):
        st.rank_count[i] = 0
    st.pairs_up = st.trips_up = st.flush_suits = st.rank_mask = 0

    cdef Tally out
    out.total = out.straight = out.flush = out.full_house = 0

    cdef int hi = first_hi
    if hi > m - n + 1:
        hi = m - n + 1
    cdef int first, s, r
    with nogil:
        for first in range(first_lo, hi):
            # First card added: its suit goes to 1 and rank to 1, so no
            # pair/trip/flush transitions are possible here.
            s = suit_of[first]
            r = rank_of[first]
            st.suit_count[s] += 1
            st.rank_count[r] += 1
            st.rank_mask |= 1 << r
            _descend(first + 1, n - 1, m, suit_of, rank_of, &st, &out)
            st.suit_count[s] -= 1
            st.rank_count[r] -= 1
            st.rank_mask &= ~(1 << r)

    return (out.total, out.straight, out.flush, out.full_house)


cdef inline uint64_t _next_u64(uint64_t* state) noexcept nogil:
    state[0] += GOLDEN
    cdef uint64_t z = state[0]
    z = (z ^ (z >> 30)) * MIX1
    z = (z ^ (z >> 27)) * MIX2
    return z ^ (z >> 31)


cdef inline int _below(uint64_t* state, int bound) noexcept nogil:
    # Masked rejection, identical draw sequence to SplitMix64.below.
    cdef uint64_t mask = <uint64_t> (bound - 1)
    mask |= mask >> 1
    mask |= mask >> 2
    mask |= mask >> 4
    mask |= mask >> 8
    mask |= mask >> 16
    mask |= mask >> 32
    cdef uint64_t r
    while True:
        r = _next_u64(state) & mask
        if r < <uint64_t> bound:
            return <int> r


def sample_hits(int n, int category_id, long long samples, object seed):
    """Hits for one category over `samples` uniform n-card hands drawn by
    partial Fisher-Yates from a persistent 52-card array."""
    if not 0 <= n <= 52:
        raise ValueError(f"hand size must be in [0, 52], got {n}")
    if category_id not in (0, 1, 2):
        raise ValueError(f"category_id must be 0, 1 or 2, got {category_id}")
    if samples < 0:
        raise ValueError("samples must be nonnegative")
    cdef uint64_t state = <uint64_t> (int(seed) & ((1 << 64) - 1))
    cdef int deck[52]
    cdef int suit_count[4]
    cdef int rank_count[13]
    cdef int i, j, s, rc, rank_mask, pairs_up, trips_up
    cdef long long t, hits = 0
    for i in range(52):
        deck[i] = i
    with nogil:
        for t in range(samples):
            for i in range(n):
                j = i + _below(&state, 52 - i)
                s = deck[i]
                deck[i] = deck[j]
                deck[j] = s
            if category_id == 0:
                rank_mask = 0
                for i in range(n):
                    rank_mask |= 1 << (deck[i] % 13)
                for i in range(10):
                    if rank_mask & WINDOWS[i] == WINDOWS[i]:
                        hits += 1
                        break
            elif category_id == 1:
                for i in range(4):
                    suit_count[i] = 0
                for i in range(n):
                    s = deck[i] // 13
                    suit_count[s] += 1
                    if suit_count[s] == 5:
                        hits += 1
                        break
            else:
                for i in range(13):
                    rank_count[i] = 0
                for i in range(n):
                    rank_count[deck[i] % 13] += 1
                pairs_up = 0
                trips_up = 0
                for i in range(13):
                    rc = rank_count[i]
                    if rc >= 2:
                        pairs_up += 1
                        if rc >= 3:
                            trips_up += 1
                if trips_up and pairs_up >= 2:
                    hits += 1
    return hits
