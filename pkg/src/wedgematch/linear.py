"""Matching one wedge permutation inside another, in linear time.

When pattern and text are both wedge permutations the whole problem
collapses onto their ascent/descent words: the pattern occurs in the
text exactly when the pattern's word is a subsequence of the text's
word, and a greedy leftmost subsequence match converts directly into an
embedding.  The reason this works: matching letter i of the pattern word
at letter position j of the text pairs pattern entry i with text entry
j, and the wedge shape guarantees that any letter-respecting pairing is
automatically order-isomorphic — an A entry sits below everything that
follows it in both permutations, a D entry above.

The scan looks at each text letter once and stops as soon as the last
pattern letter is matched, so the decision is available without reading
the rest of the text.  A step counter is exposed for benchmarking.
"""

from __future__ import annotations

from .core import ClassViolation, Embedding, Permutation, is_av_213_231

__all__ = ["count_scan_steps", "matches_both_avoiding"]


def _greedy_word_match(pattern: Permutation, text: Permutation) -> tuple[Embedding | None, int]:
    """Shared scan: (embedding or None, number of text letters examined)."""
    sig = pattern.values
    pi = text.values
    k, n = len(sig), len(pi)
    if k > n:
        return None, 0
    if k == 1:
        return (1,), 0

    positions: list[int] = []
    need = 0  # index into the pattern word
    # Letters are computed on the fly; storing the words would double the
    # memory traffic for no gain.
    want_ascent = sig[need] < sig[need + 1]
    steps = 0
    for j in range(n - 1):
        steps += 1
        if (pi[j] < pi[j + 1]) == want_ascent:
            positions.append(j + 1)  # 1-based letter position
            need += 1
            if need == k - 1:
                # All k-1 letters matched; the final pattern entry rides
                # along as the entry right after the last matched letter.
                positions.append(j + 2)
                return tuple(positions), steps
            want_ascent = sig[need] < sig[need + 1]
    return None, steps


def matches_both_avoiding(pattern: Permutation, text: Permutation) -> Embedding | None:
    """Find an occurrence of one wedge permutation in another.

    Returns the greedy leftmost embedding (1-based text positions), or
    None.  Raises :class:`ClassViolation` if either argument is not a
    wedge permutation — use the factor or brute matchers for general
    texts.

    >>> from .core import parse_permutation
    >>> matches_both_avoiding(parse_permutation("4 3 1 2"), parse_permutation("5 4 3 1 2"))
    (1, 2, 4, 5)
    >>> matches_both_avoiding(parse_permutation("1 2 3"), parse_permutation("3 2 1")) is None
    True
    """
    for name, perm in (("pattern", pattern), ("text", text)):
        if not is_av_213_231(perm):
            raise ClassViolation(f"{name} is not a wedge permutation: {perm}")
    embedding, _ = _greedy_word_match(pattern, text)
    return embedding


def count_scan_steps(pattern: Permutation, text: Permutation) -> int:
    """Number of text letters the greedy scan examines before deciding.

    At most n - 1; a successful match can stop much earlier.
    """
    for name, perm in (("pattern", pattern), ("text", text)):
        if not is_av_213_231(perm):
            raise ClassViolation(f"{name} is not a wedge permutation: {perm}")
    _, steps = _greedy_word_match(pattern, text)
    return steps
