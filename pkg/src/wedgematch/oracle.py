"""Brute-force reference implementations.

Everything in this module works straight from definitions -- enumerate
subsequences, check order-isomorphism, transcribe each constraint
literally -- so the clever algorithms elsewhere have something dumb and
trustworthy to be measured against.  Nothing here shares code with the
production matchers beyond the core permutation type.

All entry points are guarded: past the stated sizes they raise
:class:`SizeGuard` instead of silently running for hours.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .core import (
    ClassViolation,
    Embedding,
    Permutation,
    factor_decompose,
    flatten,
    is_av_213_231,
)
from .bivincular import BivincularPattern

__all__ = [
    "SizeGuard",
    "brute_lcs_av",
    "brute_lm",
    "brute_lm_table",
    "brute_longest_av",
    "brute_match",
    "brute_match_bivincular",
    "embedding_satisfies_bivincular",
    "suffix_run_extremes",
]


class SizeGuard(ValueError):
    """An oracle was asked to run beyond its guarded input size."""


def _guard(what: str, value: int, limit: int) -> None:
    if value > limit:
        raise SizeGuard(f"oracle guard: {what} = {value} exceeds limit {limit}")


def brute_match(pattern: Permutation, text: Permutation) -> Embedding | None:
    """Classical containment by backtracking, any pattern, any text.

    Returns the lexicographically smallest embedding (1-based), or None.
    Guarded at pattern length 12 and text length 40.

    >>> brute_match(Permutation((5, 1, 3, 4, 2)), Permutation((3, 9, 1, 8, 6, 7, 4, 5, 2)))
    (2, 3, 5, 6, 7)
    >>> brute_match(Permutation((1, 2, 3, 4)), Permutation((4, 3, 2, 1))) is None
    True
    """
    _guard("pattern length", pattern.n, 12)
    _guard("text length", text.n, 40)
    sig, vals = pattern.values, text.values
    k, n = len(sig), len(vals)
    chosen: list[int] = []

    def search(i: int, start: int) -> bool:
        if i == k:
            return True
        for c in range(start, n - (k - i) + 1):
            v = vals[c]
            if all((sig[t] < sig[i]) == (vals[chosen[t]] < v) for t in range(i)):
                chosen.append(c)
                if search(i + 1, c + 1):
                    return True
                chosen.pop()
        return False

    if search(0, 0):
        return tuple(c + 1 for c in chosen)
    return None


def embedding_satisfies_bivincular(pattern: BivincularPattern, text: Permutation,
                                   embedding: Sequence[int]) -> bool:
    """Literal transcription of every bivincular condition for a given
    candidate embedding (1-based positions, strictly increasing).

    >>> from .bivincular import parse_bivincular
    >>> from .core import parse_permutation
    >>> sigma = parse_bivincular("bottom=2 1 4 3; first; pos_adj=3; val_adj=2; max_anchor")
    >>> text = parse_permutation("3 2 1 6 7 4 5")
    >>> embedding_satisfies_bivincular(sigma, text, (1, 2, 5, 6))
    True
    >>> embedding_satisfies_bivincular(sigma, text, (2, 3, 4, 6))
    False
    """
    bottom = pattern.bottom.values
    vals = text.values
    k, n = len(bottom), len(vals)
    if len(embedding) != k:
        return False
    if list(embedding) != sorted(set(embedding)):
        return False
    if embedding[0] < 1 or embedding[-1] > n:
        return False
    matched = [vals[p - 1] for p in embedding]
    for s in range(k):
        for t in range(s + 1, k):
            if (bottom[s] < bottom[t]) != (matched[s] < matched[t]):
                return False
    for p in pattern.pos_adjacent:
        if embedding[p] != embedding[p - 1] + 1:
            return False
    if pattern.first_anchor and embedding[0] != 1:
        return False
    if pattern.last_anchor and embedding[-1] != n:
        return False
    pos_of = {v: i for i, v in enumerate(bottom)}
    for v in pattern.val_adjacent:
        if matched[pos_of[v + 1]] != matched[pos_of[v]] + 1:
            return False
    if pattern.min_anchor and matched[pos_of[1]] != 1:
        return False
    if pattern.max_anchor and matched[pos_of[k]] != n:
        return False
    return True


def brute_match_bivincular(pattern: BivincularPattern, text: Permutation,
                           ) -> Embedding | None:
    """Bivincular containment by enumerating every k-subset of positions.

    Returns the lexicographically smallest satisfying embedding, or
    None.  Guarded at pattern length 12 and text length 20.

    >>> from .bivincular import BivincularPattern
    >>> p = BivincularPattern(Permutation((1, 2)), pos_adjacent={1})
    >>> brute_match_bivincular(p, Permutation((1, 3, 2)))
    (1, 2)
    """
    _guard("pattern length", pattern.k, 12)
    _guard("text length", text.n, 20)
    k, n = pattern.k, text.n
    if k > n:
        return None
    for combo in itertools.combinations(range(1, n + 1), k):
        if embedding_satisfies_bivincular(pattern, text, combo):
            return combo
    return None


def _is_wedge_values(vals: Sequence[int]) -> bool:
    """Wedge test for any sequence of distinct values: every element is a
    minimum or maximum of its suffix (order-isomorphism invariant, so
    checking raw values is the same as checking the flattened pattern).
    """
    lo = hi = vals[-1]
    for v in reversed(vals[:-1]):
        if v < lo:
            lo = v
        elif v > hi:
            hi = v
        else:
            return False
    return True


def _combos(n: int, length: int) -> tuple[tuple[int, ...], ...]:
    key = (n, length)
    hit = _combo_cache.get(key)
    if hit is None:
        hit = tuple(itertools.combinations(range(n), length))
        _combo_cache[key] = hit
    return hit


_combo_cache: dict[tuple[int, int], tuple[tuple[int, ...], ...]] = {}


def brute_longest_av(text: Permutation) -> int:
    """Length of the longest wedge subsequence, by enumerating subsets in
    decreasing size.  Guarded at text length 12.

    >>> brute_longest_av(Permutation((3, 9, 1, 8, 6, 7, 4, 5, 2)))
    6
    """
    _guard("text length", text.n, 12)
    vals = text.values
    n = len(vals)
    for length in range(n, 0, -1):
        for combo in _combos(n, length):
            if _is_wedge_values([vals[c] for c in combo]):
                return length
    raise AssertionError("unreachable: a single element is always a wedge")


def brute_lcs_av(a: Permutation, b: Permutation) -> int:
    """Length of the longest common wedge pattern, by enumerating wedge
    subsequences of the first input in decreasing size and testing
    containment in the second.  Guarded at length 8 each.

    >>> brute_lcs_av(Permutation((2, 4, 1, 3)), Permutation((3, 1, 4, 2)))
    3
    >>> brute_lcs_av(Permutation((1, 2, 3)), Permutation((3, 2, 1)))
    1
    """
    _guard("first length", a.n, 8)
    _guard("second length", b.n, 8)
    vals = a.values
    for length in range(min(a.n, b.n), 0, -1):
        seen: set[tuple[int, ...]] = set()
        for combo in _combos(a.n, length):
            sub = [vals[c] for c in combo]
            if not _is_wedge_values(sub):
                continue
            candidate = flatten(sub)
            if candidate.values in seen:
                continue
            seen.add(candidate.values)
            if brute_match(candidate, b) is not None:
                return length
    raise AssertionError("unreachable: pattern 1 is common to any two permutations")


def suffix_run_extremes(suffix: Permutation, kind: str, text: Permutation,
                        ) -> list[int | None]:
    """For each anchor position, the tightest extreme over all matchings
    of ``suffix`` in the text that start exactly at that anchor: the
    minimum over matchings of the matching's maximum when ``kind`` is
    "ascent", the maximum of minima when "descent".

    This is the definitional counterpart of one row of the factor DP's
    table, computed by full enumeration.  Guarded at text length 12.
    """
    if kind not in ("ascent", "descent"):
        raise ValueError(f"kind must be 'ascent' or 'descent', got {kind!r}")
    _guard("text length", text.n, 12)
    _guard("suffix length", suffix.n, 12)
    vals = text.values
    n, length = len(vals), suffix.n
    order = sorted(range(length), key=lambda i: suffix.values[i])
    result: list[int | None] = [None] * n
    for combo in _combos(n, length):
        lowest = highest = vals[combo[order[0]]]
        ok = True
        for o in order[1:]:
            v = vals[combo[o]]
            if v <= highest:
                ok = False
                break
            highest = v
        if not ok:
            continue
        anchor = combo[0]
        current = result[anchor]
        if kind == "ascent":
            if current is None or highest < current:
                result[anchor] = highest
        else:
            if current is None or lowest > current:
                result[anchor] = lowest
    return result


def brute_lm(pattern: Permutation, text: Permutation, label: int, start: int,
             ) -> int | None:
    """One cell of the factor DP's table, from the definition.

    ``label`` names a factor of the (wedge) pattern, counted from the
    right; the cell covers the pattern suffix that starts at that
    factor, anchored at 1-based text position ``start``.

    >>> brute_lm(Permutation((1, 3, 2)), Permutation((2, 4, 1, 5, 3)), 2, 1)
    4
    """
    if not is_av_213_231(pattern):
        raise ClassViolation(f"pattern is not a wedge permutation: {pattern}")
    if not 1 <= start <= text.n:
        raise ValueError(f"start must be in 1..{text.n}, got {start}")
    decomposition = factor_decompose(pattern)
    factor = decomposition.factor(label)
    suffix = flatten(pattern.values[factor.start - 1:])
    return suffix_run_extremes(suffix, factor.kind, text)[start - 1]


def brute_lm_table(pattern: Permutation, text: Permutation) -> list[list[int | None]]:
    """Every cell of the factor DP's table, from the definition.  Row r
    (0-based) covers the suffix starting at factor label r+1, matching
    the production table's layout.
    """
    if not is_av_213_231(pattern):
        raise ClassViolation(f"pattern is not a wedge permutation: {pattern}")
    decomposition = factor_decompose(pattern)
    rows: list[list[int | None]] = []
    for label in range(1, decomposition.m + 1):
        factor = decomposition.factor(label)
        suffix = flatten(pattern.values[factor.start - 1:])
        rows.append(suffix_run_extremes(suffix, factor.kind, text))
    return rows
