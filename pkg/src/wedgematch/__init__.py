"""Pattern matching in wedge permutations.

A wedge permutation is one in which every entry is either a minimum or
a maximum of the suffix it starts -- equivalently, one avoiding both
213 and 231.  This package provides:

* the wedge class itself: recognition, the bijection with binary
  ascent/descent words, enumeration, and random sampling (``core``);
* a one-pass matcher for a wedge pattern inside a wedge text
  (``linear``);
* a factor-at-a-time dynamic program matching a wedge pattern inside an
  arbitrary text (``factor``);
* a window dynamic program for bivincular wedge patterns -- adjacency
  and anchor constraints on top of containment (``bivincular``);
* longest wedge subsequence of one permutation and longest common
  wedge pattern of two (``longest``);
* deliberately naive reference implementations for testing (``oracle``);
* a command-line front end (``wedgematch``, see ``cli``).
"""

from .core import (
    ClassViolation,
    Embedding,
    Factor,
    FactorDecomposition,
    Permutation,
    ascent_descent_word,
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
from .linear import count_scan_steps, matches_both_avoiding
from .factor import (
    BoundedRunIndex,
    LMTable,
    bounded_lds,
    bounded_lis,
    build_lm_table,
    matches_pattern_avoiding,
)
from .bivincular import (
    BivincularPattern,
    decide_many,
    matches_bivincular,
    parse_bivincular,
)
from .longest import (
    LcsResult,
    PivotTables,
    lcs_av,
    longest_av_subsequence,
    pivot_tables,
)
from .oracle import (
    SizeGuard,
    brute_lcs_av,
    brute_lm,
    brute_lm_table,
    brute_longest_av,
    brute_match,
    brute_match_bivincular,
    embedding_satisfies_bivincular,
    suffix_run_extremes,
)

__version__ = "0.1.0"

__all__ = [
    "BivincularPattern",
    "BoundedRunIndex",
    "ClassViolation",
    "Embedding",
    "Factor",
    "FactorDecomposition",
    "LMTable",
    "LcsResult",
    "Permutation",
    "PivotTables",
    "SizeGuard",
    "__version__",
    "ascent_descent_word",
    "bounded_lds",
    "bounded_lis",
    "brute_lcs_av",
    "brute_lm",
    "brute_lm_table",
    "brute_longest_av",
    "brute_match",
    "brute_match_bivincular",
    "build_lm_table",
    "count_scan_steps",
    "decide_many",
    "embedding_satisfies_bivincular",
    "enumerate_av",
    "factor_decompose",
    "flatten",
    "format_permutation",
    "is_av_213_231",
    "lcs_av",
    "longest_av_subsequence",
    "make_permutation",
    "matches_bivincular",
    "matches_both_avoiding",
    "matches_pattern_avoiding",
    "parse_bivincular",
    "parse_permutation",
    "pivot_tables",
    "random_av",
    "suffix_run_extremes",
    "word_to_permutation",
]
