# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernel: rank-window partitions in a box, counted by weight.

Same contract as the pure twin; int64 tallies, so the caller keeps the top
weight at or below 400 (p(400) is the last unrestricted count fitting 63 bits).
"""

from libc.stdlib cimport calloc, free


cdef int _rank_status(int *parts, int length, int lo, int hi) noexcept nogil:
    # 1: all ranks inside the window; 0: none below but some above; -1: below.
    cdef int ptr = length
    cdef int i = 1
    cdef int ok = 1
    cdef int rank
    while i <= length and parts[i - 1] >= i:
        while parts[ptr - 1] < i:
            ptr -= 1
        rank = parts[i - 1] - ptr
        if rank < lo:
            return -1
        if rank > hi:
            ok = 0
        i += 1
    return ok


cdef void _descend(int bound, int weight, int depth, int *parts,
                   long long *counts, int max_length, int top,
                   int lo, int hi) noexcept nogil:
    cdef int x = bound if bound <= top - weight else top - weight
    cdef int w, status
    while x >= 1:
        parts[depth] = x
        w = weight + x
        status = _rank_status(parts, depth + 1, lo, hi)
        if status >= 0:
            if status == 1:
                counts[w] += 1
            if depth + 1 < max_length and w < top:
                _descend(x, w, depth + 1, parts, counts, max_length, top, lo, hi)
        x -= 1


def count_rank_bounded_partitions(int max_part, int max_length,
                                  int rank_lo, int rank_hi, int cap):
    """Per-weight counts of rank-window partitions in a box (see the pure twin)."""
    if max_part < 0 or max_length < 0 or cap < 0:
        raise ValueError("box sides and cap must be nonnegative")
    cdef long long box = <long long> max_part * <long long> max_length
    cdef int top = cap if cap < box else <int> box
    if top > 400:
        raise ValueError("top weight above 400 risks int64 overflow; use the pure kernel")
    result = [0] * (top + 1)
    result[0] = 1
    if top == 0:
        return result
    cdef int *parts = <int *> calloc(max_length if max_length > 0 else 1, sizeof(int))
    cdef long long *counts = <long long *> calloc(top + 1, sizeof(long long))
    if parts == NULL or counts == NULL:
        free(parts)
        free(counts)
        raise MemoryError()
    try:
        with nogil:
            _descend(max_part, 0, 0, parts, counts, max_length, top, rank_lo, rank_hi)
        for w in range(1, top + 1):
            result[w] = counts[w]
    finally:
        free(parts)
        free(counts)
    return result
