"""Longest wedge subsequences: within one permutation, and common to two.

A wedge subsequence is an increasing chain and a decreasing chain that
end on a shared final element: every chain element is automatically a
suffix extreme of the union (increasing-chain elements sit below the
shared endpoint and everything else still to come, decreasing-chain
elements above).  So the longest wedge subsequence through pivot f has
length rise_end(f) + fall_end(f) - 1, where rise_end/fall_end are the
classic longest increasing/decreasing subsequence lengths ending
exactly at f, and the answer maximises over pivots.  One Fenwick pass
per direction computes every ending length in O(n log n).

The longest *common* wedge pattern of two permutations is a different
beast: a dynamic program over pairs of positions and a pair of open
value windows, one per permutation.  After matching a pair of values,
the rest of the common pattern must stay entirely above or entirely
below the match in both permutations at once (the wedge property again),
which is exactly a window shrink on the matched side.  Whenever the
full window table fits a fixed memory budget (about n1 = n2 = 33 for
square inputs) it runs on a dense compiled table (see _kernels); larger
inputs fall back to a lazy memo over reachable states, which is capped
rather than allowed to exhaust the machine -- truly oversized pairs
raise ValueError.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ._prefix_tree import PrefixMaxTree
from .core import Embedding, Permutation, flatten

__all__ = [
    "LcsResult",
    "PivotTables",
    "lcs_av",
    "longest_av_subsequence",
    "pivot_tables",
]

# The dense table holds one byte per (position pair, window pair) state,
# W = (n+1)(n+2)/2 windows per side; use it whenever it fits this budget.
_DENSE_CELL_BUDGET = 512 * 2 ** 20
# Beyond the budget the lazy memo grows with the reachable state count,
# which for unstructured inputs approaches the full table size; stop
# well before the dict itself becomes a memory hazard.
_MAX_MEMO_STATES = 4_000_000


def _window_table_cells(n1: int, n2: int) -> int:
    w1 = (n1 + 1) * (n1 + 2) // 2
    w2 = (n2 + 1) * (n2 + 2) // 2
    return (n1 + 1) * (n2 + 1) * w1 * w2


@dataclass(frozen=True)
class PivotTables:
    """Ending lengths of monotone runs, per position (0-based tuples).

    rise_end[f] is the length of the longest increasing subsequence
    ending exactly at f; fall_end[f] the decreasing counterpart.  The
    parent arrays record a realizing predecessor (-1 at a run start),
    which is what witness reconstruction walks.

    >>> t = pivot_tables(Permutation((3, 9, 1, 8, 6, 7, 4, 5, 2)))
    >>> t.rise_end
    (1, 2, 1, 2, 2, 3, 2, 3, 2)
    >>> t.fall_end
    (1, 1, 2, 2, 3, 3, 4, 4, 5)
    """

    text: Permutation
    rise_end: tuple[int, ...]
    fall_end: tuple[int, ...]
    rise_parent: tuple[int, ...]
    fall_parent: tuple[int, ...]


def pivot_tables(text: Permutation) -> PivotTables:
    """Both ending-length tables in two Fenwick passes."""
    vals = text.values
    n = len(vals)

    def one_direction(key: Callable[[int], int]) -> tuple[list[int], list[int]]:
        tree = PrefixMaxTree(n)
        lengths = [0] * n
        parents = [0] * n
        for pos, v in enumerate(vals):
            w = key(v)
            best, arg = tree.prefix_argmax(w - 1)
            lengths[pos] = best + 1
            parents[pos] = arg
            tree.insert(w, best + 1, pos)
        return lengths, parents

    rise, rise_par = one_direction(lambda v: v)
    fall, fall_par = one_direction(lambda v: n + 1 - v)
    return PivotTables(text, tuple(rise), tuple(fall),
                       tuple(rise_par), tuple(fall_par))


def longest_av_subsequence(text: Permutation) -> tuple[int, Embedding]:
    """Longest wedge subsequence of a permutation.

    Returns (length, 1-based positions).  The witness pivots on the
    smallest position achieving the optimum, so it is deterministic.

    >>> longest_av_subsequence(Permutation((3, 9, 1, 8, 6, 7, 4, 5, 2)))[0]
    6
    >>> longest_av_subsequence(Permutation((1,)))
    (1, (1,))
    """
    tables = pivot_tables(text)
    n = text.n
    pivot = max(range(n), key=lambda f: tables.rise_end[f] + tables.fall_end[f])
    # max() keeps the first maximizer, so the pivot is the smallest.
    length = tables.rise_end[pivot] + tables.fall_end[pivot] - 1

    positions = set()
    for parents in (tables.rise_parent, tables.fall_parent):
        pos = pivot
        while pos != -1:
            positions.add(pos)
            pos = parents[pos]
    assert len(positions) == length
    return length, tuple(p + 1 for p in sorted(positions))


@dataclass(frozen=True)
class LcsResult:
    """A longest common wedge pattern and where it sits in both inputs."""

    length: int
    witness: Permutation
    embedding_a: Embedding
    embedding_b: Embedding


def lcs_av(a: Permutation, b: Permutation) -> LcsResult:
    """Longest common wedge pattern of two permutations.

    The result length is at least 1 (a single element is always common)
    and the witness is reported as a flattened permutation together with
    one embedding per input.  Deterministic: the reconstruction prefers
    matching over skipping, skipping in the first input over the second,
    and ascending continuations over descending ones.

    >>> r = lcs_av(Permutation((2, 4, 1, 3)), Permutation((3, 1, 4, 2)))
    >>> r.length
    3
    >>> lcs_av(Permutation((1, 2, 3)), Permutation((3, 2, 1))).length
    1
    """
    if _window_table_cells(a.n, b.n) <= _DENSE_CELL_BUDGET:
        pairs = _dense_pairs(a, b)
    else:
        pairs = _lazy_pairs(a, b)
    emb_a = tuple(i + 1 for i, _ in pairs)
    emb_b = tuple(j + 1 for _, j in pairs)
    witness = flatten([a.values[i] for i, _ in pairs])
    assert witness == flatten([b.values[j] for _, j in pairs])
    return LcsResult(len(pairs), witness, emb_a, emb_b)


def _dense_pairs(a: Permutation, b: Permutation) -> list[tuple[int, int]]:
    from . import _kernels

    p1 = np.array(a.values, dtype=np.int64)
    p2 = np.array(b.values, dtype=np.int64)
    n1, n2 = a.n, b.n
    off1, w1n = _kernels.lcs_offsets(n1)
    off2, w2n = _kernels.lcs_offsets(n2)
    table = np.zeros((n1 + 1) * (n2 + 1) * w1n * w2n, dtype=np.int8)
    length = int(_kernels.lcs_fill(p1, p2, off1, off2, table))

    s2 = w1n * w2n
    s1 = (n2 + 1) * s2

    def cell(i1: int, i2: int, w1: int, w2: int) -> int:
        return int(table[i1 * s1 + i2 * s2 + w1 * w2n + w2])

    def wid(off: np.ndarray, lb: int, ub: int) -> int:
        return int(off[lb]) + (ub - lb - 1)

    pairs: list[tuple[int, int]] = []
    i1 = i2 = 0
    lb1, ub1, lb2, ub2 = 0, n1 + 1, 0, n2 + 1
    need = length
    while need > 0:
        v1, v2 = a.values[i1], b.values[i2]
        w1 = wid(off1, lb1, ub1)
        w2 = wid(off2, lb2, ub2)
        matched = False
        if lb1 < v1 < ub1 and lb2 < v2 < ub2:
            up = cell(i1 + 1, i2 + 1, wid(off1, v1, ub1), wid(off2, v2, ub2))
            if 1 + up == need:
                pairs.append((i1, i2))
                lb1, lb2 = v1, v2
                matched = True
            else:
                down = cell(i1 + 1, i2 + 1, wid(off1, lb1, v1), wid(off2, lb2, v2))
                if 1 + down == need:
                    pairs.append((i1, i2))
                    ub1, ub2 = v1, v2
                    matched = True
        if matched:
            i1 += 1
            i2 += 1
            need -= 1
        elif cell(i1 + 1, i2, w1, w2) == need:
            i1 += 1
        else:
            assert cell(i1, i2 + 1, w1, w2) == need
            i2 += 1
    return pairs


def _lazy_pairs(
    a: Permutation,
    b: Permutation,
    max_states: int = _MAX_MEMO_STATES,
) -> list[tuple[int, int]]:
    """Same recurrence as the dense kernel, memoised over reachable
    states only.  Windows are exclusive (lb, ub) with sentinels 0, n+1.
    """
    v1s, v2s = a.values, b.values
    n1, n2 = len(v1s), len(v2s)
    memo: dict[tuple[int, int, int, int, int, int], int] = {}

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * (n1 + n2) + 64))

    def solve(i1: int, i2: int, lb1: int, ub1: int, lb2: int, ub2: int) -> int:
        if i1 == n1 or i2 == n2:
            return 0
        key = (i1, i2, lb1, ub1, lb2, ub2)
        hit = memo.get(key)
        if hit is not None:
            return hit
        best = solve(i1 + 1, i2, lb1, ub1, lb2, ub2)
        t = solve(i1, i2 + 1, lb1, ub1, lb2, ub2)
        if t > best:
            best = t
        v1, v2 = v1s[i1], v2s[i2]
        if lb1 < v1 < ub1 and lb2 < v2 < ub2:
            t = 1 + solve(i1 + 1, i2 + 1, v1, ub1, v2, ub2)
            if t > best:
                best = t
            t = 1 + solve(i1 + 1, i2 + 1, lb1, v1, lb2, v2)
            if t > best:
                best = t
        if len(memo) >= max_states:
            raise ValueError(
                f"common-pattern search over inputs of size {n1} and {n2} "
                f"needs more than {max_states:,} window states; this "
                f"algorithm's table grows as (n1*n2)**3 and these inputs "
                f"are beyond its practical range"
            )
        memo[key] = best
        return best

    need = solve(0, 0, 0, n1 + 1, 0, n2 + 1)
    pairs: list[tuple[int, int]] = []
    i1 = i2 = 0
    lb1, ub1, lb2, ub2 = 0, n1 + 1, 0, n2 + 1
    while need > 0:
        v1, v2 = v1s[i1], v2s[i2]
        matched = False
        if lb1 < v1 < ub1 and lb2 < v2 < ub2:
            if 1 + solve(i1 + 1, i2 + 1, v1, ub1, v2, ub2) == need:
                pairs.append((i1, i2))
                lb1, lb2 = v1, v2
                matched = True
            elif 1 + solve(i1 + 1, i2 + 1, lb1, v1, lb2, v2) == need:
                pairs.append((i1, i2))
                ub1, ub2 = v1, v2
                matched = True
        if matched:
            i1 += 1
            i2 += 1
            need -= 1
        elif solve(i1 + 1, i2, lb1, ub1, lb2, ub2) == need:
            i1 += 1
        else:
            assert solve(i1, i2 + 1, lb1, ub1, lb2, ub2) == need
            i2 += 1
    return pairs
