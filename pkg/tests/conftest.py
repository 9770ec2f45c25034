"""Shared test plumbing: a compact permutation literal, cached families,
and a one-time warmup so jitted kernels never bill their compile time to
a timed assertion."""

from __future__ import annotations

import itertools
from functools import lru_cache

import pytest
from hypothesis import settings

from wedgematch import Permutation, enumerate_av

# Jitted code makes first-call latency wildly unrepresentative, so no
# per-example deadlines anywhere in the suite.
settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


def P(text: str) -> Permutation:
    """Permutation literal: either digits ("24153") or space-separated
    values ("2 4 1 5 3")."""
    stripped = text.strip()
    if " " in stripped:
        return Permutation(tuple(int(tok) for tok in stripped.split()))
    return Permutation(tuple(int(ch) for ch in stripped))


@lru_cache(maxsize=None)
def av_family(n: int) -> tuple[Permutation, ...]:
    """All wedge permutations of size n."""
    return tuple(enumerate_av(n))


@lru_cache(maxsize=None)
def full_family(n: int) -> tuple[Permutation, ...]:
    """All of S_n."""
    return tuple(
        Permutation(values) for values in itertools.permutations(range(1, n + 1))
    )


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Touch every jitted kernel once up front."""
    from wedgematch import (
        build_lm_table,
        decide_many,
        lcs_av,
        matches_bivincular,
        parse_bivincular,
    )

    build_lm_table(P("132"), P("24153"))
    pattern = parse_bivincular("bottom=1 2")
    matches_bivincular(pattern, P("12"))
    decide_many(pattern, [P("12"), P("21")])
    lcs_av(P("12"), P("21"))
