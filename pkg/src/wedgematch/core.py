"""Wedge permutations and their ascent/descent words.

A permutation of size n is a rearrangement of 1..n.  Throughout this
package permutations are value sequences: ``Permutation((2, 4, 1, 5, 3))``
is the permutation sending position 1 to value 2, position 2 to value 4,
and so on.  Positions and values are both 1-based in every public
interface; the text format is the space-separated value list, e.g.
``"2 4 1 5 3"``.

A *wedge* permutation is one in which every entry is a minimum or a
maximum of the suffix starting at it.  Plotted, the points form a ``>``
shape converging on the last entry: a rising chain of suffix minima and
a falling chain of suffix maxima.  Equivalently these are exactly the
permutations containing neither 213 nor 231 as a (classical) pattern.

Wedge permutations of size n correspond bijectively to words of length
n - 1 over the alphabet {A, D}: letter i is A when the i-th entry is
smaller than its successor (an ascent) and D otherwise.  There are
therefore 2**(n-1) of them.  Most of the matching algorithms in this
package work on the word side of this bijection, so the word maps live
here next to the recognizer.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Literal, Sequence

__all__ = [
    "ClassViolation",
    "Embedding",
    "Factor",
    "FactorDecomposition",
    "Permutation",
    "ascent_descent_word",
    "enumerate_av",
    "factor_decompose",
    "flatten",
    "format_permutation",
    "is_av_213_231",
    "make_permutation",
    "parse_permutation",
    "random_av",
    "word_to_permutation",
]

# An embedding is a tuple of strictly increasing 1-based text positions;
# the text values read off at those positions are order-isomorphic to the
# pattern that was matched.
Embedding = tuple[int, ...]


class ClassViolation(ValueError):
    """An operation required a wedge permutation and got something else."""


@dataclass(frozen=True)
class Permutation:
    """A permutation of 1..n, stored as its tuple of values.

    >>> p = Permutation((2, 4, 1, 5, 3))
    >>> len(p), p.n
    (5, 5)
    >>> list(p)
    [2, 4, 1, 5, 3]
    >>> str(p)
    '2 4 1 5 3'
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.values)
        if n == 0:
            raise ValueError("a permutation must have at least one value")
        if sorted(self.values) != list(range(1, n + 1)):
            raise ValueError(
                f"not a permutation of 1..{n}: {self.values!r} "
                "(duplicate or out-of-range values)"
            )

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


def make_permutation(values: Iterable[int]) -> Permutation:
    """Build a :class:`Permutation`, validating the input.

    >>> make_permutation([3, 1, 2])
    Permutation('3 1 2')
    >>> make_permutation([1, 3])
    Traceback (most recent call last):
        ...
    ValueError: not a permutation of 1..2: (1, 3) (duplicate or out-of-range values)
    """
    return Permutation(tuple(int(v) for v in values))


def parse_permutation(line: str) -> Permutation:
    """Parse the one-line text format: space-separated values of 1..n.

    Duplicates and gaps are rejected; use :func:`flatten` first if the
    input is merely a sequence of distinct integers.

    >>> parse_permutation("2 4 1 5 3")
    Permutation('2 4 1 5 3')
    """
    parts = line.split()
    if not parts:
        raise ValueError("empty permutation")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"non-integer token in permutation: {line!r}") from None
    return make_permutation(values)


def format_permutation(perm: Permutation) -> str:
    """Inverse of :func:`parse_permutation`."""
    return str(perm)


def flatten(values: Sequence[int]) -> Permutation:
    """Replace each value by its rank, turning distinct integers into a
    permutation with the same relative order.

    >>> flatten([3, 2, 1, 7, 8, 4, 5])
    Permutation('3 2 1 6 7 4 5')
    """
    if len(set(values)) != len(values):
        raise ValueError(f"cannot flatten: duplicate values in {list(values)!r}")
    if not values:
        raise ValueError("cannot flatten an empty sequence")
    rank = {v: i + 1 for i, v in enumerate(sorted(values))}
    return Permutation(tuple(rank[v] for v in values))


def is_av_213_231(perm: Permutation) -> bool:
    """Recognize wedge permutations in one right-to-left pass.

    An entry that is neither the minimum nor the maximum of its suffix
    is the "2" of a 213 or 231 occurrence (the suffix holds something
    smaller and something larger, in one order or the other), and
    conversely.  So it suffices to track the suffix extrema.

    >>> is_av_213_231(Permutation((5, 4, 1, 2, 3)))
    True
    >>> is_av_213_231(Permutation((2, 1, 4, 3)))
    False
    """
    vals = perm.values
    lo = hi = vals[-1]
    for v in reversed(vals[:-1]):
        if v < lo:
            lo = v
        elif v > hi:
            hi = v
        else:
            return False
    return True


def ascent_descent_word(perm: Permutation) -> str:
    """The word of a permutation: letter i is ``A`` if entry i is smaller
    than entry i+1, else ``D``.  Length n - 1; the empty string for n = 1.

    Defined for every permutation, wedge or not, but only a wedge
    permutation can be recovered from its word.

    >>> ascent_descent_word(Permutation((1, 2, 3, 9, 8, 4, 7, 6, 5)))
    'AAADDADD'
    """
    vals = perm.values
    return "".join("A" if a < b else "D" for a, b in zip(vals, vals[1:]))


def word_to_permutation(word: str) -> Permutation:
    """The unique wedge permutation with the given ascent/descent word.

    An ``A`` entry must be the suffix minimum of what remains, a ``D``
    entry the suffix maximum, so the permutation is built by consuming
    the unused values from whichever end the letter dictates.

    >>> word_to_permutation("DDA")
    Permutation('4 3 1 2')
    >>> word_to_permutation("")
    Permutation('1')
    """
    bad = set(word) - {"A", "D"}
    if bad:
        raise ValueError(f"word may only contain 'A' and 'D', got {sorted(bad)!r}")
    lo, hi = 1, len(word) + 1
    out = []
    for letter in word:
        if letter == "A":
            out.append(lo)
            lo += 1
        else:
            out.append(hi)
            hi -= 1
    assert lo == hi
    out.append(lo)
    return Permutation(tuple(out))


def enumerate_av(n: int) -> Iterator[Permutation]:
    """Yield all 2**(n-1) wedge permutations of size n, in lexicographic
    order of their words (A before D).

    >>> [str(p) for p in enumerate_av(3)]
    ['1 2 3', '1 3 2', '3 1 2', '3 2 1']
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    for letters in itertools.product("AD", repeat=n - 1):
        yield word_to_permutation("".join(letters))


def random_av(n: int, rng: random.Random | int | None = None) -> Permutation:
    """A uniformly random wedge permutation of size n.

    Uniform over the class because words are drawn uniformly and the
    word map is a bijection.  ``rng`` may be a seed or a ``Random``
    instance; the same seed always gives the same permutation.

    >>> random_av(8, 42) == random_av(8, 42)
    True
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    word = "".join(rng.choice("AD") for _ in range(n - 1))
    return word_to_permutation(word)


# --------------------------------------------------------------------------
# Factor decomposition
#
# Cutting the word of a wedge permutation into maximal runs of equal
# letters cuts the permutation into factors that are alternately
# increasing and decreasing runs of entries; the final entry (which has
# no letter) joins the last run.  Factors are *labelled* from the right:
# the rightmost factor is factor 1, the leftmost is factor m.  The
# matching algorithms process factors right to left, so this numbering
# makes factor labels line up with recursion depth.


@dataclass(frozen=True)
class Factor:
    """One maximal monotone run of a wedge permutation.

    ``start`` and ``end`` are 1-based positions, both inclusive.
    """

    kind: Literal["ascent", "descent"]
    start: int
    end: int

    @property
    def size(self) -> int:
        return self.end - self.start + 1


@dataclass(frozen=True)
class FactorDecomposition:
    """The run factors of a wedge permutation, left to right.

    ``factors[0]`` is the leftmost factor and carries the highest label;
    labels count down to 1 at the rightmost factor.

    >>> d = factor_decompose(Permutation((1, 2, 3, 9, 8, 4, 7, 6, 5)))
    >>> d.m
    4
    >>> [(f.kind, f.start, f.end) for f in d.factors]
    [('ascent', 1, 3), ('descent', 4, 5), ('ascent', 6, 6), ('descent', 7, 9)]
    >>> d.leftmost_index(4), d.leftmost_index(1)
    (1, 7)
    """

    permutation: Permutation
    factors: tuple[Factor, ...]

    @property
    def m(self) -> int:
        """Number of factors."""
        return len(self.factors)

    def factor(self, label: int) -> Factor:
        """The factor with the given label (m = leftmost, 1 = rightmost)."""
        if not 1 <= label <= self.m:
            raise ValueError(f"factor label must be in 1..{self.m}, got {label}")
        return self.factors[self.m - label]

    def leftmost_index(self, label: int) -> int:
        """1-based position of the first entry of the labelled factor."""
        return self.factor(label).start


def factor_decompose(perm: Permutation) -> FactorDecomposition:
    """Split a wedge permutation into its maximal monotone runs.

    A single entry has an empty word; by convention it is one ascent
    factor of size 1.

    >>> d = factor_decompose(Permutation((7, 6, 5, 1, 2, 3, 4)))
    >>> [(f.kind, f.size) for f in d.factors]
    [('descent', 3), ('ascent', 4)]
    """
    if not is_av_213_231(perm):
        raise ClassViolation(
            f"factor decomposition needs a wedge permutation, got {perm}"
        )
    word = ascent_descent_word(perm)
    if not word:
        return FactorDecomposition(perm, (Factor("ascent", 1, 1),))
    factors: list[Factor] = []
    start = 1
    for pos in range(1, len(word)):
        if word[pos] != word[pos - 1]:
            kind = "ascent" if word[pos - 1] == "A" else "descent"
            factors.append(Factor(kind, start, pos))
            start = pos + 1
    # The final run absorbs the last entry: a trailing maximal run of
    # letters word[start-1:] plus the letterless final position.
    kind = "ascent" if word[-1] == "A" else "descent"
    factors.append(Factor(kind, start, len(word) + 1))
    return FactorDecomposition(perm, tuple(factors))
