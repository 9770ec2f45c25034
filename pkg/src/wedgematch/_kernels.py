"""Compiled inner loops for the three dynamic programs.

Everything here is numba-compiled and operates on plain numpy arrays;
the wrapping modules own validation, array preparation and witness
reconstruction.  Callers pass workspace arrays in so that batch runs
(thousands of texts against one pattern) reuse memory instead of
reallocating per call.

The per-cell Fenwick sweeps reset their trees with a stamp array rather
than clearing: a cell's sweep bumps the stamp and treats any slot with
an older stamp as empty.  That keeps each of the O(n^2) sweeps O(n log n)
without an O(n) clear per cell.
"""

from __future__ import annotations

import numpy as np
from numba import njit

__all__ = [
    "lcs_fill",
    "lcs_offsets",
    "lm_build",
    "pm_decide_batch",
    "pm_fill",
]


# --------------------------------------------------------------------------
# Factor-decomposition matching: the run-extreme table.
#
# Rows follow factor labels: row r describes the pattern suffix starting
# at factor label r+1 (row 0 is the rightmost factor, the base case).
# lm[r, j] is the tightest reachable extreme over all matchings of that
# suffix whose first entry lands exactly on text position j: the minimum
# over matchings of the matching's maximum when factor r+1 ascends, and
# the maximum of the matching's minimum when it descends.  0 encodes
# "no matching"; choice[r, j] records the sweep endpoint that realised
# the stored extreme (-1 if none), which is all reconstruction needs.


@njit(cache=True)
def lm_build(pi, sizes, kinds, lm, choice, tree, stamp):
    """Fill lm/choice rows bottom-up.  Returns (first_j, steps) where
    first_j is the smallest 0-based anchor of a full match (-1 if none)
    and steps counts inner sweep iterations.

    pi      -- text values, int64[n]
    sizes   -- factor sizes by row, int64[m]
    kinds   -- +1 ascending / -1 descending by row, int64[m]
    lm, choice -- int64[m, n] outputs
    tree, stamp -- int64[n + 1] Fenwick workspace
    """
    m = sizes.shape[0]
    n = pi.shape[0]
    cur_stamp = 0
    steps = 0
    for r in range(m):
        asc = kinds[r] > 0
        size = sizes[r]
        for j in range(n):
            best = 0
            bestj = -1
            cur_stamp += 1
            # Transformed values: w = pi for ascending rows, n+1-pi for
            # descending ones, so both kinds are "increasing runs" and
            # one prefix-max tree serves both.  tree[w] holds the best
            # length of a run that starts at the anchor pi[j] and ends
            # at transformed value w, among positions processed so far.
            a = pi[j] if asc else n + 1 - pi[j]
            idx = a
            while idx <= n:
                if stamp[idx] != cur_stamp:
                    stamp[idx] = cur_stamp
                    tree[idx] = 1
                elif tree[idx] < 1:
                    tree[idx] = 1
                idx += idx & (-idx)
            for jp in range(j, n):
                steps += 1
                if jp > j:
                    # Extend anchored runs with pi[jp]: longest run ending
                    # strictly below w, plus one.  Only anchored runs are
                    # ever inserted, because the anchor is the sole seed.
                    w = pi[jp] if asc else n + 1 - pi[jp]
                    q = 0
                    idx = w - 1
                    while idx > 0:
                        if stamp[idx] == cur_stamp and tree[idx] > q:
                            q = tree[idx]
                        idx -= idx & (-idx)
                    if q >= 1:
                        ln = q + 1
                        idx = w
                        while idx <= n:
                            if stamp[idx] != cur_stamp:
                                stamp[idx] = cur_stamp
                                tree[idx] = ln
                            elif tree[idx] < ln:
                                tree[idx] = ln
                            idx += idx & (-idx)
                # Candidate matching with sweep endpoint jp.
                if r == 0:
                    # Base row: the run itself is the whole suffix; its
                    # extreme is the endpoint value, and the run may use
                    # values up to that endpoint inclusive.
                    wb = pi[jp] if asc else n + 1 - pi[jp]
                    cand = pi[jp]
                else:
                    # Step row: the rest of the suffix must start right
                    # after the run, at jp+1, and the run must stay on
                    # the correct side of everything the rest matches --
                    # equivalently strictly inside the extreme stored
                    # one row below.  jp == j is a legal (singleton-free)
                    # case: the run occupies [j, j] alone.
                    if jp + 1 >= n:
                        continue
                    prev = lm[r - 1, jp + 1]
                    if prev == 0:
                        continue
                    wb = (prev - 1) if asc else (n + 1 - prev) - 1
                    cand = pi[jp + 1]
                    if wb <= 0:
                        continue
                q = 0
                idx = wb
                while idx > 0:
                    if stamp[idx] == cur_stamp and tree[idx] > q:
                        q = tree[idx]
                    idx -= idx & (-idx)
                if q >= size:
                    if bestj < 0 or (asc and cand < best) or (not asc and cand > best):
                        best = cand
                        bestj = jp
            lm[r, j] = best if bestj >= 0 else 0
            choice[r, j] = bestj
    first_j = -1
    for j in range(n):
        if lm[m - 1, j] != 0:
            first_j = j
            break
    return first_j, steps


# --------------------------------------------------------------------------
# Bivincular matching: the window DP.
#
# table[i, j, lb, ub] is true when pattern positions i.. can be matched
# with position i landing on text position j and all matched values kept
# inside the inclusive window [lb, ub].  Filling runs from the last
# pattern position (base) back to the first; matching an ascending
# pattern entry shrinks the window from below for the rest, a descending
# one from above.  Gate arrays pin an entry to its window edge, which is
# how value-adjacency and min/max anchoring propagate; position
# adjacency forces the successor to sit at exactly j+1.  suf holds
# suffix-ORs of table over j so "any successor position >= j+1" is O(1).


@njit(cache=True)
def pm_fill(pi, kind, adj_next, gate_lb, gate_ub,
            last_anchor, base_one, base_top, table, suf):
    """Fill table/suf (uint8[k, n, n+2, n+2]) for one text.

    pi -- text values, int64[n]
    kind -- +1 ascending / -1 descending per pattern position (last unused)
    adj_next -- uint8, successor must sit at j+1
    gate_lb, gate_ub -- uint8, entry must equal its window edge
    last_anchor, base_one, base_top -- base-row bools: j == n-1,
        pi[j] == 1, pi[j] == n respectively
    """
    n = pi.shape[0]
    k = kind.shape[0]
    for i in range(k - 1, -1, -1):
        glb = gate_lb[i] != 0
        gub = gate_ub[i] != 0
        base = i == k - 1
        for j in range(n - 1, -1, -1):
            v = pi[j]
            for lb in range(1, n + 2):
                for ub in range(0, n + 1):
                    ok = False
                    if lb <= v <= ub:
                        if base:
                            ok = True
                            if last_anchor and j != n - 1:
                                ok = False
                            if base_one and v != 1:
                                ok = False
                            if base_top and v != n:
                                ok = False
                            if glb and v != lb:
                                ok = False
                            if gub and v != ub:
                                ok = False
                        else:
                            gateok = True
                            if glb and v != lb:
                                gateok = False
                            if gub and v != ub:
                                gateok = False
                            if gateok and j + 1 < n:
                                if kind[i] > 0:
                                    nlb, nub = v + 1, ub
                                else:
                                    nlb, nub = lb, v - 1
                                if adj_next[i] != 0:
                                    ok = table[i + 1, j + 1, nlb, nub] != 0
                                else:
                                    ok = suf[i + 1, j + 1, nlb, nub] != 0
                    table[i, j, lb, ub] = 1 if ok else 0
        for lb in range(1, n + 2):
            for ub in range(0, n + 1):
                acc = 0
                for j in range(n - 1, -1, -1):
                    if table[i, j, lb, ub] != 0:
                        acc = 1
                    suf[i, j, lb, ub] = acc


@njit(cache=True)
def pm_decide_batch(texts, kind, adj_next, gate_lb, gate_ub,
                    first_anchor, last_anchor, base_one, base_top,
                    table, suf, out):
    """Decide one bivincular pattern against many texts of equal size.

    texts -- int64[T, n]; out -- uint8[T]; table/suf -- shared workspace.
    """
    T, n = texts.shape
    for t in range(T):
        pm_fill(texts[t], kind, adj_next, gate_lb, gate_ub,
                last_anchor, base_one, base_top, table, suf)
        found = False
        if first_anchor:
            found = table[0, 0, 1, n] != 0
        else:
            found = suf[0, 0, 1, n] != 0
        out[t] = 1 if found else 0


# --------------------------------------------------------------------------
# Longest common wedge pattern of two permutations.
#
# State (i1, i2, w1, w2): the best common pattern using only positions
# >= i1 in one permutation and >= i2 in the other, with eligible values
# confined to open windows w1 and w2.  Windows are exclusive bounds
# (lb, ub) with sentinels 0 and n+1, encoded triangularly: see
# lcs_offsets.  A pair can be matched only when both current values lie
# strictly inside their windows; matching advances both indices and
# shrinks both windows to the same side (the matched entry becomes the
# minimum of the rest of the common pattern, or the maximum).


@njit(cache=True)
def lcs_fill(p1, p2, woff1, woff2, table):
    """Fill the dense table and return the answer at full windows.

    table -- int8[(n1+1) * (n2+1) * W1 * W2], flat; indexing is
    i1 * s1 + i2 * s2 + w1 * W2 + w2 with s2 = W1 * W2, s1 = (n2+1) * s2.
    """
    n1 = p1.shape[0]
    n2 = p2.shape[0]
    w1n = woff1[n1 + 1]
    w2n = woff2[n2 + 1]
    s2 = w1n * w2n
    s1 = (n2 + 1) * s2
    for idx in range(s1 * (n1 + 1)):
        table[idx] = 0
    for i1 in range(n1 - 1, -1, -1):
        v1 = p1[i1]
        base1 = i1 * s1
        for i2 in range(n2 - 1, -1, -1):
            v2 = p2[i2]
            base = base1 + i2 * s2
            skip1base = base + s1
            skip2base = base + s2
            matchbase = base + s1 + s2
            w1 = 0
            for lb1 in range(0, n1 + 1):
                for ub1 in range(lb1 + 1, n1 + 2):
                    in1 = lb1 < v1 < ub1
                    # Window after matching v1: rest above -> (v1, ub1),
                    # rest below -> (lb1, v1).
                    wup1 = woff1[v1] + (ub1 - v1 - 1)
                    wdn1 = woff1[lb1] + (v1 - lb1 - 1)
                    row1 = w1 * w2n
                    w2 = 0
                    for lb2 in range(0, n2 + 1):
                        for ub2 in range(lb2 + 1, n2 + 2):
                            best = table[skip1base + row1 + w2]
                            t = table[skip2base + row1 + w2]
                            if t > best:
                                best = t
                            if in1 and lb2 < v2 < ub2:
                                wup2 = woff2[v2] + (ub2 - v2 - 1)
                                t = 1 + table[matchbase + wup1 * w2n + wup2]
                                if t > best:
                                    best = t
                                wdn2 = woff2[lb2] + (v2 - lb2 - 1)
                                t = 1 + table[matchbase + wdn1 * w2n + wdn2]
                                if t > best:
                                    best = t
                            table[base + row1 + w2] = best
                            w2 += 1
                    w1 += 1
    wfull1 = woff1[0] + n1
    wfull2 = woff2[0] + n2
    return table[wfull1 * w2n + wfull2]


def lcs_offsets(n: int) -> tuple[np.ndarray, int]:
    """Triangular window encoding for exclusive bounds 0 <= lb < ub <= n+1.

    Window (lb, ub) gets id offsets[lb] + (ub - lb - 1); returns
    (offsets, window_count) with offsets[n+1] == window_count.
    """
    off = np.zeros(n + 2, dtype=np.int64)
    acc = 0
    for lb in range(n + 2):
        off[lb] = acc
        acc += n + 1 - lb
    return off, acc
