"""Permutation patterns with adjacency and boundary constraints.

A bivincular pattern is a permutation (the *bottom* row of its two-line
notation) decorated with extra requirements on where its entries may
land in the text:

* position adjacency -- matched positions p, p+1 must be consecutive in
  the text;
* value adjacency -- the text values matched to pattern values v, v+1
  must be consecutive integers;
* first/last anchors -- the match must start at the first text position
  / end at the last;
* min/max anchors -- pattern value 1 must land on text value 1 /
  pattern value k on text value n.

The fast matcher requires the bottom to be a wedge permutation and
scans its positions left to right.  Matching an ascending entry (a
suffix minimum of the bottom) confines everything still to match to
values above it; a descending entry confines the rest to values below.
So the state is an inclusive value window plus a text position, and
every decoration becomes local: position adjacency pins the successor's
position, and each value decoration pins some entry's value to an edge
of the current window.  The edge-pinning works because in a wedge
bottom the edge in question cannot move between the two members of a
constrained pair (the entries in between sit on the other side), and
cannot move before value 1 or k is matched; see the gate computation.

Bottoms outside the wedge class are still legal patterns -- the
decorations are defined for any permutation -- but they get a plain
backtracking search instead of the window DP, so they are only
practical for small patterns.  (For general bottoms the problem
contains classical permutation pattern matching, which is NP-complete.)

The DP table is filled by a compiled kernel (see _kernels); this module
owns the pattern type, the textual grammar, gate computation, the
fallback search, and embedding reconstruction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import (
    Embedding,
    Permutation,
    is_av_213_231,
    parse_permutation,
)

__all__ = [
    "BivincularPattern",
    "decide_many",
    "matches_bivincular",
    "parse_bivincular",
]


@dataclass(frozen=True)
class BivincularPattern:
    """A bottom-row permutation plus its decorations.

    ``pos_adjacent`` holds 1-based pair indices: p means matched
    positions p and p+1 must be text neighbours.  ``val_adjacent`` holds
    values: v means the text values matched to v and v+1 must be
    consecutive.  Both therefore live in 1..k-1.

    >>> p = BivincularPattern(Permutation((2, 1, 4, 3)), pos_adjacent={3},
    ...                       val_adjacent={2}, max_anchor=True, first_anchor=True)
    >>> p.k, p.wedge
    (4, False)
    >>> str(p)
    'bottom=2 1 4 3; first; pos_adj=3; val_adj=2; max_anchor'
    """

    bottom: Permutation
    pos_adjacent: frozenset[int] = frozenset()
    val_adjacent: frozenset[int] = frozenset()
    first_anchor: bool = False
    last_anchor: bool = False
    min_anchor: bool = False
    max_anchor: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "pos_adjacent", frozenset(self.pos_adjacent))
        object.__setattr__(self, "val_adjacent", frozenset(self.val_adjacent))
        k = self.bottom.n
        for name, pairs in (("pos_adj", self.pos_adjacent), ("val_adj", self.val_adjacent)):
            bad = [p for p in pairs if not 1 <= p <= k - 1]
            if bad:
                raise ValueError(
                    f"{name} pair indices must be in 1..{k - 1}, got {sorted(bad)}"
                )

    @property
    def k(self) -> int:
        return self.bottom.n

    @property
    def wedge(self) -> bool:
        """True when the bottom is in the wedge class (fast matcher applies)."""
        return is_av_213_231(self.bottom)

    @property
    def plain(self) -> bool:
        """True when no decoration is present (classical containment)."""
        return not (self.pos_adjacent or self.val_adjacent or self.first_anchor
                    or self.last_anchor or self.min_anchor or self.max_anchor)

    def __str__(self) -> str:
        parts = [f"bottom={self.bottom}"]
        if self.first_anchor:
            parts.append("first")
        if self.last_anchor:
            parts.append("last")
        if self.pos_adjacent:
            parts.append("pos_adj=" + ",".join(str(p) for p in sorted(self.pos_adjacent)))
        if self.val_adjacent:
            parts.append("val_adj=" + ",".join(str(v) for v in sorted(self.val_adjacent)))
        if self.min_anchor:
            parts.append("min_anchor")
        if self.max_anchor:
            parts.append("max_anchor")
        return "; ".join(parts)


def parse_bivincular(text: str) -> BivincularPattern:
    """Parse the one-line pattern grammar.

    Fields are separated by ``;``: a required ``bottom=<permutation>``,
    optional ``pos_adj=<ints>`` and ``val_adj=<ints>`` (comma-separated),
    and the flags ``first``, ``last``, ``min_anchor``, ``max_anchor``.
    Unknown or duplicate fields are errors.

    >>> parse_bivincular("bottom=2 1 4 3; first; pos_adj=3; val_adj=2; max_anchor").k
    4
    """
    bottom: Permutation | None = None
    lists: dict[str, frozenset[int]] = {}
    flags: set[str] = set()
    for raw in text.split(";"):
        part = raw.strip()
        if not part:
            raise ValueError(f"empty field in bivincular pattern: {text!r}")
        if part in ("first", "last", "min_anchor", "max_anchor"):
            if part in flags:
                raise ValueError(f"duplicate flag {part!r}")
            flags.add(part)
            continue
        key, eq, value = part.partition("=")
        key = key.strip()
        if not eq:
            raise ValueError(f"unknown flag {part!r} in bivincular pattern")
        if key == "bottom":
            if bottom is not None:
                raise ValueError("duplicate bottom field")
            bottom = parse_permutation(value)
        elif key in ("pos_adj", "val_adj"):
            if key in lists:
                raise ValueError(f"duplicate {key} field")
            try:
                lists[key] = frozenset(int(t) for t in value.split(","))
            except ValueError:
                raise ValueError(f"bad integer list in {part!r}") from None
        else:
            raise ValueError(f"unknown field {key!r} in bivincular pattern")
    if bottom is None:
        raise ValueError("bivincular pattern needs a bottom= field")
    return BivincularPattern(
        bottom,
        pos_adjacent=lists.get("pos_adj", frozenset()),
        val_adjacent=lists.get("val_adj", frozenset()),
        first_anchor="first" in flags,
        last_anchor="last" in flags,
        min_anchor="min_anchor" in flags,
        max_anchor="max_anchor" in flags,
    )


def _gate_arrays(pattern: BivincularPattern) -> tuple[np.ndarray, ...]:
    """Compile the decorations into per-position kernel inputs.

    Only used for wedge bottoms.  kind[i] is +1 when entry i ascends
    (is a suffix minimum of the bottom), -1 when it descends; the last
    entry's kind is never read.

    The value decorations become window-edge pins.  Take a constrained
    pair (v, v+1) whose member at pattern position i has its partner at
    an *earlier* position.  The partner's match set the relevant window
    edge right next to itself, and every entry between the two (a value
    strictly between v and v+1 being impossible) lies on the far side of
    the pair, so it moved only the other edge.  Hence "the text values
    are consecutive" is exactly "this entry's match equals the current
    window edge": the lower bound when the partner is v (in a wedge
    bottom v must then be ascending), the upper bound when it is v+1.
    The same reasoning pins a min anchor to the lower bound -- no entry
    before value 1 can be ascending, so that bound is still 1 when
    value 1 is matched -- and a max anchor to the upper bound.  A pair
    member whose partner comes later carries no gate; the partner does.
    """
    bottom = pattern.bottom.values
    k = len(bottom)
    pos_of = {v: i for i, v in enumerate(bottom)}  # 0-based position of each value
    kind = np.empty(k, dtype=np.int64)
    for i in range(k - 1):
        kind[i] = 1 if bottom[i] < bottom[i + 1] else -1
    kind[k - 1] = 1
    adj_next = np.zeros(k, dtype=np.uint8)
    for p in pattern.pos_adjacent:
        adj_next[p - 1] = 1
    gate_lb = np.zeros(k, dtype=np.uint8)
    gate_ub = np.zeros(k, dtype=np.uint8)
    for i, v in enumerate(bottom):
        if (v - 1 in pattern.val_adjacent and pos_of[v - 1] < i) or (
                pattern.min_anchor and v == 1):
            gate_lb[i] = 1
        if (v in pattern.val_adjacent and pos_of[v + 1] < i) or (
                pattern.max_anchor and v == k):
            gate_ub[i] = 1
    return kind, adj_next, gate_lb, gate_ub


def _base_flags(pattern: BivincularPattern) -> tuple[bool, bool]:
    """Literal base-row demands: a min/max anchor sitting on the last
    pattern entry forces the matched text value to be exactly 1 / n.
    """
    last = pattern.bottom.values[-1]
    base_one = pattern.min_anchor and last == 1
    base_top = pattern.max_anchor and last == pattern.k
    return base_one, base_top


def matches_bivincular(pattern: BivincularPattern, text: Permutation) -> Embedding | None:
    """Find an occurrence of a bivincular pattern in a permutation.

    Returns 1-based text positions (deterministic: earliest feasible
    start, then earliest feasible successor at each step), or None.
    Wedge bottoms go through the window DP; any other bottom falls back
    to backtracking over the definition.

    >>> from .core import parse_permutation
    >>> p = parse_bivincular("bottom=2 1 4 3; first; pos_adj=3; val_adj=2; max_anchor")
    >>> matches_bivincular(p, parse_permutation("3 2 1 6 7 4 5"))
    (1, 2, 5, 6)
    >>> matches_bivincular(p, parse_permutation("1 2 3 4 5 6 7")) is None
    True
    """
    k, n = pattern.k, text.n
    if k > n:
        return None
    if not pattern.wedge:
        return _search_general(pattern, text)
    pi = np.array(text.values, dtype=np.int64)
    table = np.zeros((k, n, n + 2, n + 2), dtype=np.uint8)
    suf = np.zeros_like(table)
    kind, adj_next, gate_lb, gate_ub = _gate_arrays(pattern)
    base_one, base_top = _base_flags(pattern)
    from . import _kernels

    _kernels.pm_fill(pi, kind, adj_next, gate_lb, gate_ub,
                     pattern.last_anchor, base_one, base_top, table, suf)

    starts: Iterable[int] = (0,) if pattern.first_anchor else range(n)
    anchor = next((j for j in starts if table[0, j, 1, n]), None)
    if anchor is None:
        return None

    positions = [anchor]
    j, lb, ub = anchor, 1, n
    for i in range(k - 1):
        v = int(pi[j])
        if kind[i] > 0:
            lb = v + 1
        else:
            ub = v - 1
        if adj_next[i]:
            candidates: Iterable[int] = (j + 1,)
        else:
            candidates = range(j + 1, n)
        j = next(l for l in candidates if table[i + 1, l, lb, ub])
        positions.append(j)
    return tuple(p + 1 for p in positions)


def decide_many(pattern: BivincularPattern, texts: Sequence[Permutation] | np.ndarray,
                ) -> np.ndarray:
    """Containment decisions for one pattern against many same-size texts.

    ``texts`` is either a sequence of permutations or an int64 array of
    shape (T, n), one text per row.  Returns a boolean array of length
    T.  Exists because deciding a pattern against a large family is far
    cheaper in one kernel call with shared workspace than text by text;
    non-wedge bottoms fall back to the per-text search.
    """
    if isinstance(texts, np.ndarray):
        arr = np.ascontiguousarray(texts, dtype=np.int64)
    else:
        arr = np.array([t.values for t in texts], dtype=np.int64)
    if arr.ndim != 2:
        raise ValueError(f"texts must be two-dimensional, got shape {arr.shape}")
    T, n = arr.shape
    k = pattern.k
    if k > n:
        return np.zeros(T, dtype=bool)
    if not pattern.wedge:
        perms = [Permutation(tuple(int(v) for v in row)) for row in arr]
        return np.array([_search_general(pattern, t) is not None for t in perms])
    from . import _kernels

    kind, adj_next, gate_lb, gate_ub = _gate_arrays(pattern)
    base_one, base_top = _base_flags(pattern)
    table = np.zeros((k, n, n + 2, n + 2), dtype=np.uint8)
    suf = np.zeros_like(table)
    out = np.zeros(T, dtype=np.uint8)
    _kernels.pm_decide_batch(arr, kind, adj_next, gate_lb, gate_ub,
                             pattern.first_anchor, pattern.last_anchor,
                             base_one, base_top, table, suf, out)
    return out.astype(bool)


def _search_general(pattern: BivincularPattern, text: Permutation) -> Embedding | None:
    """Definition-level matcher for arbitrary bottoms: depth-first search
    over increasing text positions with incremental constraint checks.
    Returns the lexicographically smallest embedding.  Exponential in
    the worst case -- this is the NP-complete territory the window DP
    cannot reach.
    """
    bottom = pattern.bottom.values
    vals = text.values
    k, n = len(bottom), len(vals)
    pos_of = {v: i for i, v in enumerate(bottom)}
    # For each constrained value pair, the check fires when the later
    # member is placed: its text value must sit at the given offset from
    # the earlier member's.
    pair_checks: list[tuple[int, int, int]] = []  # (later_pos, earlier_pos, offset)
    for v in pattern.val_adjacent:
        pv, pw = pos_of[v], pos_of[v + 1]
        if pv < pw:
            pair_checks.append((pw, pv, +1))
        else:
            pair_checks.append((pv, pw, -1))
    pinned: dict[int, int] = {}
    if pattern.min_anchor:
        pinned[pos_of[1]] = 1
    if pattern.max_anchor:
        pinned[pos_of[k]] = n

    chosen: list[int] = []

    def feasible(i: int, c: int) -> bool:
        v = vals[c]
        if i in pinned and v != pinned[i]:
            return False
        for t in range(i):
            if (bottom[t] < bottom[i]) != (vals[chosen[t]] < v):
                return False
        for later, earlier, offset in pair_checks:
            if later == i and v != vals[chosen[earlier]] + offset:
                return False
        if pattern.last_anchor and i == k - 1 and c != n - 1:
            return False
        return True

    def search(i: int) -> bool:
        if i == k:
            return True
        if i == 0:
            candidates: Iterable[int] = (0,) if pattern.first_anchor else range(n)
        elif i in pattern.pos_adjacent:
            # 1-based pair index i links 0-based positions i-1 and i,
            # so this entry must sit right after the previous one.
            candidates = (chosen[-1] + 1,)
        else:
            candidates = range(chosen[-1] + 1, n)
        for c in candidates:
            if c >= n or n - c < k - i:
                continue
            if feasible(i, c):
                chosen.append(c)
                if search(i + 1):
                    return True
                chosen.pop()
        return False

    if k > n:
        return None
    if search(0):
        return tuple(c + 1 for c in chosen)
    return None
