"""Core type, recognition, bijection, enumeration, sampling."""

from __future__ import annotations

import dataclasses
import random

import pytest
from hypothesis import given, strategies as st

from wedgematch import (
    ClassViolation,
    Permutation,
    ascent_descent_word,
    brute_match,
    enumerate_av,
    factor_decompose,
    flatten,
    format_permutation,
    is_av_213_231,
    make_permutation,
    parse_permutation,
    random_av,
    word_to_permutation,
)
from conftest import P, av_family, full_family
from helpers import wedge_perms


# ---------------------------------------------------------------------------
# Permutation type and parsing


def test_permutation_basics():
    p = P("24153")
    assert p.n == 5
    assert len(p) == 5
    assert list(p) == [2, 4, 1, 5, 3]
    assert str(p) == "2 4 1 5 3"
    assert p == Permutation((2, 4, 1, 5, 3))
    assert p in {P("24153")}


def test_permutation_is_immutable():
    p = P("312")
    with pytest.raises(dataclasses.FrozenInstanceError):
        p.values = (1, 2, 3)


@pytest.mark.parametrize("bad", [(), (0, 1), (1, 1), (1, 3), (2,), (1, 2, 4)])
def test_permutation_rejects_non_bijections(bad):
    with pytest.raises(ValueError):
        Permutation(tuple(bad))


def test_parse_and_format_round_trip():
    for n in range(1, 7):
        for perm in full_family(n):
            assert parse_permutation(format_permutation(perm)) == perm


@pytest.mark.parametrize("bad", ["", "1 2 2", "1 3", "0 1", "a b", "1.5 2"])
def test_parse_rejects_junk(bad):
    with pytest.raises(ValueError):
        parse_permutation(bad)


def test_make_permutation_accepts_any_iterable():
    assert make_permutation(iter([3, 1, 2])) == P("312")


def test_flatten_ranks_arbitrary_values():
    assert flatten((3, 2, 1, 7, 8, 4, 5)) == P("3 2 1 6 7 4 5")
    assert flatten((10, -5)) == P("21")


@given(st.lists(st.integers(-1000, 1000), min_size=1, max_size=40, unique=True))
def test_flatten_preserves_relative_order(values):
    flat = flatten(values).values
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            assert (values[i] < values[j]) == (flat[i] < flat[j])


@given(wedge_perms)
def test_flatten_fixes_permutations(perm):
    assert flatten(perm.values) == perm


# ---------------------------------------------------------------------------
# recognition


def test_recognition_on_all_of_s3():
    wedge = {P("123"), P("132"), P("312"), P("321")}
    for perm in full_family(3):
        assert is_av_213_231(perm) == (perm in wedge)


def test_recognition_matches_avoidance_definition():
    p213, p231 = P("213"), P("231")
    for n in range(1, 7):
        for perm in full_family(n):
            avoids = (
                brute_match(p213, perm) is None
                and brute_match(p231, perm) is None
            )
            assert is_av_213_231(perm) == avoids


# ---------------------------------------------------------------------------
# word bijection


def test_word_examples():
    assert ascent_descent_word(P("1")) == ""
    assert ascent_descent_word(P("1234")) == "AAA"
    assert ascent_descent_word(P("4321")) == "DDD"
    assert word_to_permutation("DDA") == P("4312")


def test_word_round_trips_both_ways():
    for bits in range(2 ** 8):
        word = format(bits, "08b").translate(str.maketrans("01", "AD"))
        assert ascent_descent_word(word_to_permutation(word)) == word
    for n in range(1, 9):
        for perm in av_family(n):
            assert word_to_permutation(ascent_descent_word(perm)) == perm


def test_word_rejects_other_letters():
    with pytest.raises(ValueError):
        word_to_permutation("ABD")


# ---------------------------------------------------------------------------
# enumeration and sampling


def test_enumeration_counts_and_membership():
    for n in range(1, 11):
        members = list(enumerate_av(n))
        assert len(members) == 2 ** (n - 1)
        assert len(set(members)) == len(members)
        assert all(is_av_213_231(p) for p in members)
        assert all(p.n == n for p in members)


def test_enumeration_is_lexicographic():
    for n in range(1, 9):
        members = [p.values for p in enumerate_av(n)]
        assert members == sorted(members)


def test_enumeration_size_four_exactly():
    expected = ["1 2 3 4", "1 2 4 3", "1 4 2 3", "1 4 3 2",
                "4 1 2 3", "4 1 3 2", "4 3 1 2", "4 3 2 1"]
    assert [str(p) for p in enumerate_av(4)] == expected


def test_random_av_is_seeded_and_in_class():
    assert random_av(12, 7) == random_av(12, 7)
    rng = random.Random(7)
    assert random_av(12, rng) == random_av(12, 7)
    for n in (1, 2, 5, 30):
        perm = random_av(n, 123)
        assert perm.n == n
        assert is_av_213_231(perm)


def test_random_av_reaches_the_whole_class():
    rng = random.Random(0)
    seen = {random_av(4, rng) for _ in range(400)}
    assert seen == set(av_family(4))


# ---------------------------------------------------------------------------
# factor decomposition


def test_factor_decomposition_shape():
    d = factor_decompose(P("1 2 3 9 8 4 7 6 5"))
    spans = [(f.kind, f.start, f.end) for f in d.factors]
    assert spans == [("ascent", 1, 3), ("descent", 4, 5),
                     ("ascent", 6, 6), ("descent", 7, 9)]
    assert d.m == 4
    assert d.factor(4).start == 1
    assert d.factor(1).start == 7
    assert d.leftmost_index(4) == 1
    assert d.leftmost_index(1) == 7


def test_factor_decomposition_single_element_is_one_ascent():
    d = factor_decompose(P("1"))
    assert [(f.kind, f.start, f.end) for f in d.factors] == [("ascent", 1, 1)]


def test_factor_decomposition_rejects_non_wedge():
    with pytest.raises(ClassViolation):
        factor_decompose(P("213"))


@given(wedge_perms)
def test_factors_partition_and_alternate(perm):
    d = factor_decompose(perm)
    covered = []
    for f in d.factors:
        assert 1 <= f.start <= f.end <= perm.n
        assert f.size == f.end - f.start + 1
        covered.extend(range(f.start, f.end + 1))
        run = perm.values[f.start - 1:f.end]
        if f.kind == "ascent":
            assert all(a < b for a, b in zip(run, run[1:]))
        else:
            assert all(a > b for a, b in zip(run, run[1:]))
    assert covered == list(range(1, perm.n + 1))
    kinds = [f.kind for f in d.factors]
    assert all(a != b for a, b in zip(kinds, kinds[1:]))
    for label in range(1, d.m + 1):
        assert d.factor(label) is d.factors[d.m - label]
