"""Pure-Python census kernel: exhaustive per-forest tallies over B(n, k).

Reference implementation; _census_cy.pyx is a line-for-line compiled twin.
A forest is visited as (tree_1 ... tree_m, mark): the walk below chooses,
left to right, each tree's leaf count and exact height, recursing once per
concrete shape (table[l][h] many), then tallies every mark position.  The
per-vertex tally needs only the height profile: the four symmetric-set
labels are blocked by mark position, the marked tree being trivial, or a
neighbour of height exactly k standing in the way of a merge.
"""

from __future__ import annotations


def bb_census(n: int, k: int, table: list[list[int]]) -> tuple[int, ...]:
    """Exhaustive tallies over B(n, k).

    table[l][h] = number of trees with l leaves and height exactly h,
    for 0 <= l <= n and 0 <= h <= k (row 0 ignored).

    Returns (total, trivial_marked, marked_leftmost, marked_rightmost,
    x1inv_blocked, x1barinv_blocked, isolated, sequences); `sequences`
    counts unmarked tree sequences, `total` equals |B(n, k)|.
    """
    acc = [0] * 7
    hs = [0] * n
    sequences = 0

    def tally(m: int) -> None:
        for mark in range(m):
            h = hs[mark]
            trivial = h == 0
            right_b = mark == m - 1 or hs[mark + 1] == k
            left_b = mark == 0 or hs[mark - 1] == k
            acc[0] += 1
            if trivial:
                acc[1] += 1
            if mark == 0:
                acc[2] += 1
            if mark == m - 1:
                acc[3] += 1
            if right_b or h == k:
                acc[4] += 1
            if left_b or h == k:
                acc[5] += 1
            if trivial and (right_b or h == k) and (left_b or h == k):
                acc[6] += 1

    def rec(rem: int, m: int) -> None:
        nonlocal sequences
        if rem == 0:
            sequences += 1
            tally(m)
            return
        for l in range(1, rem + 1):
            row = table[l]
            hmax = min(k, l - 1)
            for h in range(hmax + 1):
                cnt = row[h]
                if cnt == 0:
                    continue
                hs[m] = h
                for _ in range(cnt):
                    rec(rem - l, m + 1)

    rec(n, 0)
    return (*acc, sequences)
