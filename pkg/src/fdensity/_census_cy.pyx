# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled census kernel; the reference twin lives in _census_py."""

from libc.stdlib cimport free, malloc


cdef struct Acc:
    long long total
    long long trivial
    long long leftmost
    long long rightmost
    long long right_blocked
    long long left_blocked
    long long isolated
    long long sequences


cdef void _tally(int m, int k, int* hs, Acc* acc) noexcept nogil:
    cdef int mark, h
    cdef bint trivial, right_b, left_b
    for mark in range(m):
        h = hs[mark]
        trivial = h == 0
        right_b = mark == m - 1 or hs[mark + 1] == k
        left_b = mark == 0 or hs[mark - 1] == k
        acc.total += 1
        if trivial:
            acc.trivial += 1
        if mark == 0:
            acc.leftmost += 1
        if mark == m - 1:
            acc.rightmost += 1
        if right_b or h == k:
            acc.right_blocked += 1
        if left_b or h == k:
            acc.left_blocked += 1
        if trivial and (right_b or h == k) and (left_b or h == k):
            acc.isolated += 1


cdef void _rec(int rem, int m, int k, long long* table, int* hs, Acc* acc) noexcept nogil:
    cdef int l, h, hmax
    cdef long long cnt, c
    if rem == 0:
        acc.sequences += 1
        _tally(m, k, hs, acc)
        return
    for l in range(1, rem + 1):
        hmax = l - 1
        if hmax > k:
            hmax = k
        for h in range(hmax + 1):
            cnt = table[l * (k + 1) + h]
            if cnt == 0:
                continue
            hs[m] = h
            for c in range(cnt):
                _rec(rem - l, m + 1, k, table, hs, acc)


def bb_census(int n, int k, table):
    """Exhaustive tallies over B(n, k); see _census_py.bb_census."""
    cdef long long* tab = <long long*> malloc((n + 1) * (k + 1) * sizeof(long long))
    cdef int* hs = <int*> malloc(n * sizeof(int))
    if tab == NULL or hs == NULL:
        free(tab)
        free(hs)
        raise MemoryError()
    cdef Acc acc
    acc.total = acc.trivial = acc.leftmost = acc.rightmost = 0
    acc.right_blocked = acc.left_blocked = acc.isolated = acc.sequences = 0
    cdef int l, h
    try:
        for l in range(n + 1):
            row = table[l] if l < len(table) else None
            for h in range(k + 1):
                tab[l * (k + 1) + h] = row[h] if row is not None and h < len(row) else 0
        with nogil:
            _rec(n, 0, k, tab, hs, &acc)
    finally:
        free(tab)
        free(hs)
    return (
        acc.total,
        acc.trivial,
        acc.leftmost,
        acc.rightmost,
        acc.right_blocked,
        acc.left_blocked,
        acc.isolated,
        acc.sequences,
    )
