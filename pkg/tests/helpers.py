"""Batched forms of the brute-force oracles.

The exhaustive suites compare against definitional computations over
hundreds of thousands of cases; done one call at a time that would blow
every budget.  Each helper here restates a plain oracle in a cacheable
or vectorized form, and the suites that rely on one cross-check it
against the plain oracle on a sample first.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np
from hypothesis import strategies as st

from wedgematch import (
    BivincularPattern,
    Permutation,
    brute_match,
    enumerate_av,
    factor_decompose,
    flatten,
    word_to_permutation,
)
from wedgematch.oracle import suffix_run_extremes

# Random wedge permutations, sized by their ascent/descent word.
wedge_perms = st.text(alphabet="AD", max_size=9).map(word_to_permutation)


def assert_embedding(pattern: Permutation, text: Permutation,
                     embedding: tuple[int, ...]) -> None:
    """A returned embedding must be increasing 1-based positions whose
    values realize the pattern."""
    assert len(embedding) == pattern.n
    assert all(1 <= p <= text.n for p in embedding)
    assert all(a < b for a, b in zip(embedding, embedding[1:]))
    assert flatten([text.values[p - 1] for p in embedding]) == pattern


# ---------------------------------------------------------------------------
# factor-DP table rows


@lru_cache(maxsize=None)
def _extreme_row(suffix: tuple[int, ...], kind: str, text: tuple[int, ...],
                 ) -> tuple[int | None, ...]:
    return tuple(
        suffix_run_extremes(Permutation(suffix), kind, Permutation(text))
    )


def brute_rows_cached(pattern: Permutation, text: Permutation,
                      ) -> list[tuple[int | None, ...]]:
    """Same rows as ``oracle.brute_lm_table`` but cached per flattened
    (suffix, kind, text): distinct patterns share suffix shapes, so the
    exhaustive pattern grids hit the cache almost every time.  The kind
    must be part of the key because a single-element suffix looks the
    same flattened whether its factor ascends or descends.
    """
    decomposition = factor_decompose(pattern)
    rows = []
    for label in range(1, decomposition.m + 1):
        factor = decomposition.factor(label)
        suffix = flatten(pattern.values[factor.start - 1:])
        rows.append(_extreme_row(suffix.values, factor.kind, text.values))
    return rows


# ---------------------------------------------------------------------------
# bivincular pattern grids and batched decisions


def _subsets(items: list[int]):
    for size in range(len(items) + 1):
        yield from itertools.combinations(items, size)


def constraint_decorations(bottom: Permutation):
    """Every decorated form of one bottom row: all position-pair subsets,
    all value-pair subsets, all sixteen anchor combinations."""
    pair_indices = list(range(1, bottom.n))
    for pos in _subsets(pair_indices):
        for val in _subsets(pair_indices):
            for first, last, low, high in itertools.product((False, True), repeat=4):
                yield BivincularPattern(
                    bottom,
                    pos_adjacent=frozenset(pos),
                    val_adjacent=frozenset(val),
                    first_anchor=first,
                    last_anchor=last,
                    min_anchor=low,
                    max_anchor=high,
                )


# ---------------------------------------------------------------------------
# bivincular decisions, one pattern against a whole size class


def grid_decisions(pattern: BivincularPattern, texts: np.ndarray) -> np.ndarray:
    """Definitional bivincular decision for every row of ``texts`` (an
    int array, one same-size permutation per row) at once: enumerate
    position subsets, transcribe each constraint as an array comparison,
    OR over subsets."""
    count, n = texts.shape
    k = pattern.k
    out = np.zeros(count, dtype=bool)
    if k > n:
        return out
    bottom = pattern.bottom.values
    pos_of = {v: i for i, v in enumerate(bottom)}
    for combo in itertools.combinations(range(n), k):
        if pattern.first_anchor and combo[0] != 0:
            continue
        if pattern.last_anchor and combo[-1] != n - 1:
            continue
        if any(combo[p] != combo[p - 1] + 1 for p in pattern.pos_adjacent):
            continue
        sub = texts[:, combo]
        ok = np.ones(count, dtype=bool)
        for s in range(k):
            for t in range(s + 1, k):
                if bottom[s] < bottom[t]:
                    ok &= sub[:, s] < sub[:, t]
                else:
                    ok &= sub[:, s] > sub[:, t]
        for v in pattern.val_adjacent:
            ok &= sub[:, pos_of[v + 1]] == sub[:, pos_of[v]] + 1
        if pattern.min_anchor:
            ok &= sub[:, pos_of[1]] == 1
        if pattern.max_anchor:
            ok &= sub[:, pos_of[k]] == n
        out |= ok
        if out.all():
            break
    return out


# ---------------------------------------------------------------------------
# longest-common-wedge-pattern lengths from containment profiles


@lru_cache(maxsize=None)
def _pattern_universe(max_len: int) -> tuple[tuple[Permutation, ...], dict[int, int]]:
    """Every wedge permutation of size 1..max_len, with one bitmask per
    size selecting that size's slice of the index space."""
    patterns: list[Permutation] = []
    for m in range(1, max_len + 1):
        patterns.extend(enumerate_av(m))
    masks: dict[int, int] = {}
    for index, pattern in enumerate(patterns):
        masks[pattern.n] = masks.get(pattern.n, 0) | (1 << index)
    return tuple(patterns), masks


def containment_profile(perm: Permutation, max_len: int) -> int:
    """Bitmask of which wedge patterns (of size up to max_len) occur in
    ``perm``, via the plain backtracking oracle."""
    patterns, _ = _pattern_universe(max_len)
    profile = 0
    for index, pattern in enumerate(patterns):
        if pattern.n <= perm.n and brute_match(pattern, perm) is not None:
            profile |= 1 << index
    return profile


def lcs_from_profiles(profile_a: int, profile_b: int, max_len: int) -> int:
    """Longest common wedge pattern length given two containment
    profiles: the largest size whose slice of the intersection is
    non-empty.  Equivalent to brute_lcs_av by definition -- the common
    wedge patterns are exactly the intersection bits."""
    common = profile_a & profile_b
    _, masks = _pattern_universe(max_len)
    best = 0
    for length, mask in masks.items():
        if common & mask:
            best = max(best, length)
    return best
