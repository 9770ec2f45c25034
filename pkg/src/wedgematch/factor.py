"""Matching a wedge pattern inside an arbitrary permutation text.

The wedge pattern splits into maximal monotone factors; a matching
assigns each factor an increasing (or decreasing) run in the text, with
every entry of an ascending factor below everything matched to its
right and every entry of a descending factor above — that is the whole
order structure of a wedge permutation, so nothing else needs checking.

Processing factors right to left, the only information a prefix of
factors needs about the rest is one number: how low the rest's maximum
can be kept (when the next factor ascends) or how high its minimum
(when it descends).  ``build_lm_table`` tabulates that number for every
(factor suffix, anchor position) pair; a match exists exactly when the
full-pattern row has any feasible anchor.

Each table cell is a sweep over later text positions maintaining, in a
prefix-max Fenwick tree keyed by value, the longest anchored run seen
so far below each value.  That makes the table O(k n^2 log n) to build.
The sweep itself is compiled (see _kernels); this module prepares
inputs, interprets the table, and rebuilds explicit embeddings from the
recorded sweep choices.

``bounded_lis``/``bounded_lds`` expose the anchored-run primitive the
sweep rests on, in incremental form (:class:`BoundedRunIndex`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ._prefix_tree import PrefixMaxTree
from .core import (
    ClassViolation,
    Embedding,
    FactorDecomposition,
    Permutation,
    factor_decompose,
    is_av_213_231,
)

__all__ = [
    "BoundedRunIndex",
    "LMTable",
    "bounded_lis",
    "bounded_lds",
    "build_lm_table",
    "matches_pattern_avoiding",
]


class BoundedRunIndex:
    """Longest monotone run starting at a fixed anchor, under value bounds.

    Built on a text and an anchor position, then fed subsequent positions
    one at a time with :meth:`extend`.  At any point :meth:`query`
    answers: among the positions seen so far, how long is the longest
    increasing (resp. decreasing) subsequence that starts exactly at the
    anchor and keeps all values strictly below (resp. above) ``bound``?

    Runs are anchored because the anchor is the only length-1 seed the
    tree ever receives; every insertion extends something already there.

    >>> from .core import parse_permutation
    >>> idx = BoundedRunIndex(parse_permutation("1 3 2 4"), 1)
    >>> for pos in range(2, 5):
    ...     idx.extend(pos)
    >>> idx.query(5), idx.query(4), idx.query(2)
    (3, 2, 1)
    """

    def __init__(self, text: Permutation, anchor: int, kind: str = "ascent") -> None:
        if kind not in ("ascent", "descent"):
            raise ValueError(f"kind must be 'ascent' or 'descent', got {kind!r}")
        n = text.n
        if not 1 <= anchor <= n:
            raise ValueError(f"anchor must be in 1..{n}, got {anchor}")
        self._vals = text.values
        self._n = n
        self._ascending = kind == "ascent"
        self._anchor = anchor
        self._next = anchor + 1
        self._tree = PrefixMaxTree(n)
        self._tree.insert(self._key(self._vals[anchor - 1]), 1)

    def _key(self, value: int) -> int:
        # Descending runs are handled by mirroring values, so the tree
        # always works with increasing runs.
        return value if self._ascending else self._n + 1 - value

    def extend(self, pos: int) -> None:
        """Feed the next text position (they must arrive consecutively)."""
        if pos != self._next:
            raise ValueError(f"positions must be fed in order; expected {self._next}, got {pos}")
        self._next += 1
        w = self._key(self._vals[pos - 1])
        best = self._tree.prefix_max(w - 1)
        if best >= 1:
            self._tree.insert(w, best + 1)

    def query(self, bound: int) -> int:
        """Longest anchored run with all values strictly inside the bound."""
        key = bound - 1 if self._ascending else self._n - bound
        if key < 1:
            return 0
        return self._tree.prefix_max(key)


def bounded_lis(text: Permutation, start: int, end: int, bound: int) -> int:
    """Longest increasing subsequence of text[start..end] that starts at
    position ``start`` and keeps every value strictly below ``bound``.
    Positions are 1-based and inclusive.

    >>> from .core import parse_permutation
    >>> bounded_lis(parse_permutation("2 4 1 5 3"), 1, 5, 6)
    3
    >>> bounded_lis(parse_permutation("2 4 1 5 3"), 1, 5, 4)
    2
    """
    return _bounded_run(text, start, end, bound, "ascent")


def bounded_lds(text: Permutation, start: int, end: int, bound: int) -> int:
    """Mirror of :func:`bounded_lis`: decreasing, values strictly above
    ``bound``.
    """
    return _bounded_run(text, start, end, bound, "descent")


def _bounded_run(text: Permutation, start: int, end: int, bound: int, kind: str) -> int:
    if not 1 <= start <= end <= text.n:
        raise ValueError(f"need 1 <= start <= end <= {text.n}, got {start}..{end}")
    index = BoundedRunIndex(text, start, kind)
    for pos in range(start + 1, end + 1):
        index.extend(pos)
    return index.query(bound)


@dataclass(frozen=True)
class LMTable:
    """The filled run-extreme table for one (pattern, text) pair.

    Rows follow factor labels: row r (0-based) covers the pattern suffix
    starting at factor label r+1, so row 0 is the rightmost factor and
    the top row the whole pattern.  ``cells[r, j]`` holds the extreme
    value for a matching anchored at 0-based text position j, 0 when no
    such matching exists; :meth:`value` offers the 1-based, None-for-
    missing view.
    """

    pattern: Permutation
    text: Permutation
    decomposition: FactorDecomposition
    cells: np.ndarray
    choices: np.ndarray         # sweep endpoint per cell, -1 when empty
    anchor: int                 # smallest 0-based full-match anchor, -1 if none
    steps: int                  # kernel sweep iterations, for benchmarks
    # Factor metadata in row order (row r = label r+1):
    sizes: np.ndarray = field(repr=False, default=None)
    ascending: np.ndarray = field(repr=False, default=None)

    @property
    def rows(self) -> int:
        return self.cells.shape[0]

    @property
    def has_match(self) -> bool:
        return self.anchor >= 0

    def value(self, label: int, pos: int) -> int | None:
        """Cell for the suffix starting at factor ``label``, anchored at
        1-based text position ``pos``.  None when no matching exists.

        >>> from .core import parse_permutation
        >>> t = build_lm_table(parse_permutation("1 3 2"), parse_permutation("2 4 1 5 3"))
        >>> t.value(2, 1)
        4
        >>> t.value(1, 3) is None
        True
        """
        if not 1 <= label <= self.rows:
            raise ValueError(f"label must be in 1..{self.rows}, got {label}")
        if not 1 <= pos <= self.text.n:
            raise ValueError(f"pos must be in 1..{self.text.n}, got {pos}")
        cell = int(self.cells[label - 1, pos - 1])
        return cell if cell != 0 else None


def _row_arrays(decomposition: FactorDecomposition) -> tuple[np.ndarray, np.ndarray]:
    """Factor sizes and kinds in row order (rightmost factor first)."""
    factors = decomposition.factors[::-1]
    sizes = np.array([f.size for f in factors], dtype=np.int64)
    kinds = np.array([1 if f.kind == "ascent" else -1 for f in factors], dtype=np.int64)
    return sizes, kinds


def build_lm_table(pattern: Permutation, text: Permutation) -> LMTable:
    """Run the factor DP.  The pattern must be a wedge permutation; the
    text is arbitrary.
    """
    if not is_av_213_231(pattern):
        raise ClassViolation(f"pattern is not a wedge permutation: {pattern}")
    from . import _kernels

    decomposition = factor_decompose(pattern)
    sizes, kinds = _row_arrays(decomposition)
    m, n = len(sizes), text.n
    pi = np.array(text.values, dtype=np.int64)
    cells = np.zeros((m, n), dtype=np.int64)
    choices = np.full((m, n), -1, dtype=np.int64)
    tree = np.zeros(n + 1, dtype=np.int64)
    stamp = np.zeros(n + 1, dtype=np.int64)
    anchor, steps = _kernels.lm_build(pi, sizes, kinds, cells, choices, tree, stamp)
    return LMTable(pattern, text, decomposition, cells, choices,
                   int(anchor), int(steps), sizes, kinds > 0)


def _anchored_run_positions(vals: Sequence[int], lo: int, hi: int, bound: int,
                            ascending: bool, count: int) -> list[int]:
    """Recover ``count`` 0-based positions forming a monotone run that
    starts at ``lo``, stays within [lo, hi], and keeps values strictly
    below ``bound`` (ascending) or strictly above it (descending).

    The table guarantees such a run exists; this replays the cell's
    sweep with payloads so the run can be walked back by parent links.
    """
    n = len(vals)
    tree = PrefixMaxTree(n)
    parent = [-2] * n
    limit = (bound - 1) if ascending else (n - bound)
    target = -1
    for pos in range(lo, hi + 1):
        w = vals[pos] if ascending else n + 1 - vals[pos]
        if w > limit:
            continue
        if pos == lo:
            length, par = 1, -1
        else:
            best, arg = tree.prefix_argmax(w - 1)
            if best == 0:
                continue
            length, par = best + 1, arg
        parent[pos] = par
        tree.insert(w, length, pos)
        if length >= count:
            target = pos
            break
    if target < 0:
        raise AssertionError("table promised a run the replay could not find")
    chain: list[int] = []
    pos = target
    while pos != -1:
        chain.append(pos)
        pos = parent[pos]
    chain.reverse()
    # The replay stops at the first run reaching the requested length,
    # and lengths grow one at a time, so the chain is exact.
    assert len(chain) == count
    return chain


def matches_pattern_avoiding(pattern: Permutation, text: Permutation) -> Embedding | None:
    """Find an occurrence of a wedge pattern in an arbitrary text.

    Returns 1-based text positions (the match with the smallest feasible
    anchor, resolved deterministically), or None.  Raises
    :class:`ClassViolation` if the pattern is not a wedge permutation.

    >>> from .core import parse_permutation
    >>> matches_pattern_avoiding(parse_permutation("1 3 2"), parse_permutation("2 4 1 5 3"))
    (1, 2, 5)
    >>> matches_pattern_avoiding(parse_permutation("1 2 3"), parse_permutation("3 2 1")) is None
    True
    """
    table = build_lm_table(pattern, text)
    if not table.has_match:
        return None
    vals = text.values
    m = table.rows
    positions: list[int] = []
    j = table.anchor
    # Walk rows from the whole pattern (top) down to the rightmost
    # factor, peeling one factor run per row.
    for r in range(m - 1, -1, -1):
        endpoint = int(table.choices[r, j])
        assert endpoint >= 0, "matched cell lost its sweep endpoint"
        ascending = bool(table.ascending[r])
        if r == 0:
            # Base row: the run's own extreme is the endpoint's value,
            # used inclusively.
            bound = vals[endpoint] + 1 if ascending else vals[endpoint] - 1
        else:
            # The run must stay strictly inside the extreme achieved by
            # the rest of the suffix, which starts at endpoint + 1.
            bound = int(table.cells[r - 1, endpoint + 1])
        run = _anchored_run_positions(vals, j, endpoint, bound, ascending,
                                      int(table.sizes[r]))
        positions.extend(run)
        j = endpoint + 1
    return tuple(p + 1 for p in positions)
