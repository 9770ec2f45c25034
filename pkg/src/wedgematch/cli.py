"""Command-line front end.

Subcommands::

    match    test whether a pattern occurs in a text
    longest  longest wedge subsequence of one permutation
    lcs      longest common wedge pattern of two permutations
    gen      sample random wedge permutations
    enum     count (and optionally list) wedge permutations of size n
    show     draw a permutation as an ASCII dot grid
    bench    time the matchers over a size sweep

Input permutations are space- or comma-separated integers.  Distinct
integers that are not exactly 1..n are accepted and flattened to their
relative order, so ``"3 2 1 7 8 4 5"`` means the permutation
3 2 1 6 7 4 5; reported values always echo the original integers.

Exit codes: 0 = match / success, 1 = no match, 2 = bad input or any
other error.

Reports print as ``key: value`` lines, or as one JSON object with
``--json``.  Field order is fixed, and ``elapsed_ms`` stays null unless
``--timing`` is given, so JSON output is byte-for-byte reproducible for
a fixed seed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .core import (
    ClassViolation,
    Permutation,
    ascent_descent_word,
    enumerate_av,
    flatten,
    format_permutation,
    is_av_213_231,
    random_av,
)
from .linear import count_scan_steps, matches_both_avoiding
from .factor import build_lm_table, matches_pattern_avoiding
from .bivincular import matches_bivincular, parse_bivincular
from .longest import lcs_av, longest_av_subsequence
from .oracle import SizeGuard, brute_match, brute_match_bivincular

__all__ = ["main"]


class CliError(ValueError):
    """Bad command-line input; reported on stderr with exit code 2."""


@dataclass
class RunReport:
    """Result of one command, rendered as text or JSON.

    The field order of ``body`` is the serialization order; callers
    build it once, in the order they want it printed.
    """

    command: str
    inputs: dict[str, Any]
    body: dict[str, Any] = field(default_factory=dict)
    exit_code: int = 0
    elapsed_ms: float | None = None
    # Long listings (grids, generated permutations, bench tables) print
    # as bare lines instead of "key: value"; their body keys, named in
    # text_skip, then only appear in the JSON form.
    lines: Sequence[str] | None = None
    text_skip: tuple[str, ...] = ()

    def to_json(self) -> str:
        payload: dict[str, Any] = {"command": self.command, "inputs": self.inputs}
        payload.update(self.body)
        payload["elapsed_ms"] = self.elapsed_ms
        return json.dumps(payload)

    def to_text(self) -> str:
        out = []
        for key, value in self.body.items():
            if value is None or key in self.text_skip:
                continue
            if isinstance(value, bool):
                value = "yes" if value else "no"
            elif isinstance(value, (list, tuple)):
                value = " ".join(str(v) for v in value)
            out.append(f"{key}: {value}")
        if self.lines is not None:
            out.extend(self.lines)
        if self.elapsed_ms is not None:
            out.append(f"elapsed_ms: {self.elapsed_ms:.3f}")
        return "\n".join(out)


def _parse_values(raw: str, what: str) -> tuple[int, ...]:
    tokens = raw.replace(",", " ").split()
    if not tokens:
        raise CliError(f"{what} is empty")
    try:
        values = tuple(int(t) for t in tokens)
    except ValueError:
        raise CliError(f"{what} must be integers, got {raw!r}") from None
    if len(set(values)) != len(values):
        raise CliError(f"{what} has repeated values: {raw!r}")
    return values


def _parse_perm(raw: str, what: str) -> tuple[Permutation, tuple[int, ...]]:
    """Parse to a permutation by flattening; keep the raw values so
    results can be reported in the caller's own numbers."""
    values = _parse_values(raw, what)
    return flatten(values), values


# ---------------------------------------------------------------------------
# match


def cmd_match(args: argparse.Namespace) -> RunReport:
    text, text_values = _parse_perm(args.text, "text")
    inputs = {"pattern": args.pattern, "text": args.text}
    started = time.perf_counter()

    if "=" in args.pattern:
        pattern = parse_bivincular(args.pattern)
        if args.oracle:
            algorithm = "oracle"
            embedding = brute_match_bivincular(pattern, text)
        else:
            algorithm = "window-dp" if pattern.wedge else "fallback-search"
            embedding = matches_bivincular(pattern, text)
    else:
        pattern, _ = _parse_perm(args.pattern, "pattern")
        if args.oracle:
            algorithm = "oracle"
            embedding = brute_match(pattern, text)
        elif not is_av_213_231(pattern):
            raise CliError(
                f"pattern {args.pattern!r} is not a wedge permutation "
                "(it has an entry that is neither a suffix minimum nor a "
                "suffix maximum); only wedge patterns are supported here -- "
                "pass --oracle for a brute-force check"
            )
        elif is_av_213_231(text):
            algorithm = "word-scan"
            embedding = matches_both_avoiding(pattern, text)
        else:
            algorithm = "factor-dp"
            embedding = matches_pattern_avoiding(pattern, text)

    elapsed = (time.perf_counter() - started) * 1000.0
    body: dict[str, Any] = {
        "algorithm": algorithm,
        "decision": embedding is not None,
        "embedding": list(embedding) if embedding else None,
        "values": [text_values[p - 1] for p in embedding] if embedding else None,
    }
    return RunReport(
        command="match",
        inputs=inputs,
        body=body,
        exit_code=0 if embedding else 1,
        elapsed_ms=elapsed if args.timing else None,
    )


# ---------------------------------------------------------------------------
# longest / lcs


def cmd_longest(args: argparse.Namespace) -> RunReport:
    text, text_values = _parse_perm(args.text, "text")
    started = time.perf_counter()
    length, positions = longest_av_subsequence(text)
    elapsed = (time.perf_counter() - started) * 1000.0
    body = {
        "length": length,
        "positions": list(positions),
        "values": [text_values[p - 1] for p in positions],
    }
    return RunReport(
        command="longest",
        inputs={"text": args.text},
        body=body,
        elapsed_ms=elapsed if args.timing else None,
    )


def cmd_lcs(args: argparse.Namespace) -> RunReport:
    a, a_values = _parse_perm(args.text1, "first text")
    b, b_values = _parse_perm(args.text2, "second text")
    started = time.perf_counter()
    result = lcs_av(a, b)
    elapsed = (time.perf_counter() - started) * 1000.0
    body = {
        "length": result.length,
        "pattern": format_permutation(result.witness),
        "positions-1": list(result.embedding_a),
        "values-1": [a_values[p - 1] for p in result.embedding_a],
        "positions-2": list(result.embedding_b),
        "values-2": [b_values[p - 1] for p in result.embedding_b],
    }
    return RunReport(
        command="lcs",
        inputs={"text1": args.text1, "text2": args.text2},
        body=body,
        elapsed_ms=elapsed if args.timing else None,
    )


# ---------------------------------------------------------------------------
# gen / enum / show


def cmd_gen(args: argparse.Namespace) -> RunReport:
    if args.n < 1:
        raise CliError("n must be at least 1")
    if args.count < 1:
        raise CliError("--count must be at least 1")
    rng = random.Random(args.seed)
    perms = [format_permutation(random_av(args.n, rng)) for _ in range(args.count)]
    return RunReport(
        command="gen",
        inputs={"n": args.n, "count": args.count, "seed": args.seed},
        body={"permutations": perms},
        lines=perms,
        text_skip=("permutations",),
    )


_ENUM_LIST_LIMIT = 16


def cmd_enum(args: argparse.Namespace) -> RunReport:
    if args.n < 1:
        raise CliError("n must be at least 1")
    count = 2 ** (args.n - 1)
    members = None
    if args.list:
        if args.n > _ENUM_LIST_LIMIT:
            raise CliError(
                f"refusing to list {count} permutations; "
                f"--list is capped at n = {_ENUM_LIST_LIMIT}"
            )
        members = [format_permutation(p) for p in enumerate_av(args.n)]
    return RunReport(
        command="enum",
        inputs={"n": args.n},
        body={"count": count, "members": members},
        lines=members,
        text_skip=("members",),
    )


def cmd_show(args: argparse.Namespace) -> RunReport:
    perm, values = _parse_perm(args.perm, "permutation")
    n = perm.n
    width = len(str(n))
    grid = []
    for level in range(n, 0, -1):
        row = " ".join("*" if v == level else "." for v in perm.values)
        grid.append(f"{level:>{width}} | {row}")
    word = ascent_descent_word(perm)
    body = {
        "grid": grid,
        "word": word if word else None,
        "wedge": is_av_213_231(perm),
    }
    return RunReport(
        command="show",
        inputs={"perm": args.perm},
        body=body,
        lines=grid,
        text_skip=("grid",),
    )


# ---------------------------------------------------------------------------
# bench


def _bench_instances(algorithm: str, pattern: Permutation,
                     texts: list[Permutation]) -> tuple[list[int], float]:
    """Run one bucket of instances, returning per-instance step counts
    and total wall milliseconds."""
    steps: list[int] = []
    started = time.perf_counter()
    if algorithm == "scan":
        for text in texts:
            steps.append(count_scan_steps(pattern, text))
    else:
        for text in texts:
            steps.append(build_lm_table(pattern, text).steps)
    return steps, (time.perf_counter() - started) * 1000.0


def _bench_worker(payload: tuple[str, tuple[int, ...], list[tuple[int, ...]]],
                  ) -> tuple[list[int], float]:
    algorithm, pattern_values, text_values = payload
    pattern = Permutation(pattern_values)
    texts = [Permutation(v) for v in text_values]
    return _bench_instances(algorithm, pattern, texts)


def _bench_texts(args: argparse.Namespace) -> list[tuple[int, list[Permutation]]]:
    """One (size, texts) bucket per requested size, or per distinct size
    found in --batch."""
    if args.batch:
        by_size: dict[int, list[Permutation]] = {}
        with open(args.batch, encoding="utf-8") as handle:
            for lineno, line in enumerate(handle, 1):
                line = line.strip()
                if not line:
                    continue
                perm, _ = _parse_perm(line, f"{args.batch}:{lineno}")
                by_size.setdefault(perm.n, []).append(perm)
        if not by_size:
            raise CliError(f"batch file {args.batch!r} has no permutations")
        return sorted(by_size.items())

    rng = random.Random(args.seed)
    buckets = []
    for n in args.sizes:
        if args.algorithm == "scan":
            texts = [random_av(n, rng) for _ in range(args.count)]
        else:
            texts = []
            for _ in range(args.count):
                values = list(range(1, n + 1))
                rng.shuffle(values)
                texts.append(Permutation(tuple(values)))
        buckets.append((n, texts))
    return buckets


def cmd_bench(args: argparse.Namespace) -> RunReport:
    pattern, _ = _parse_perm(args.pattern, "pattern")
    if not is_av_213_231(pattern):
        raise CliError(f"bench pattern {args.pattern!r} is not a wedge permutation")
    buckets = _bench_texts(args)

    if args.parallel > 1:
        payloads = [
            (args.algorithm, pattern.values, [t.values for t in texts])
            for _, texts in buckets
        ]
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            outcomes = list(pool.map(_bench_worker, payloads))
    else:
        outcomes = [_bench_instances(args.algorithm, pattern, texts)
                    for _, texts in buckets]

    results = []
    lines = []
    for (n, texts), (steps, ms_total) in zip(buckets, outcomes):
        row = {
            "n": n,
            "count": len(texts),
            "steps_mean": sum(steps) / len(steps),
            "steps_max": max(steps),
            "ms_total": round(ms_total, 3),
        }
        results.append(row)
        lines.append(
            f"n={n:>8}  count={row['count']:>4}  "
            f"steps-mean={row['steps_mean']:>12.1f}  "
            f"steps-max={row['steps_max']:>10}  "
            f"ms-total={row['ms_total']:>10.3f}"
        )
    inputs = {
        "algorithm": args.algorithm,
        "pattern": args.pattern,
        "sizes": None if args.batch else list(args.sizes),
        "count": args.count,
        "seed": args.seed,
        "batch": args.batch,
        "parallel": args.parallel,
    }
    return RunReport(
        command="bench",
        inputs=inputs,
        body={"results": results},
        lines=lines,
        text_skip=("results",),
    )


# ---------------------------------------------------------------------------
# parser plumbing


def _sizes(raw: str) -> list[int]:
    try:
        sizes = [int(tok) for tok in raw.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {raw!r}") from None
    if not sizes or any(s < 1 for s in sizes):
        raise argparse.ArgumentTypeError(f"bad size list {raw!r}")
    return sizes


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--json", action="store_true",
                     help="emit the report as a single JSON object")
    sub.add_argument("--timing", action="store_true",
                     help="include wall-clock milliseconds in the report")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wedgematch",
        description="Pattern matching in wedge permutations "
                    "(every entry a suffix minimum or maximum).",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("match", help="test whether a pattern occurs in a text")
    p.add_argument("--pattern", required=True,
                   help='plain permutation ("1 3 2") or bivincular spec '
                        '("bottom=2 1 4 3; first; pos_adj=3")')
    p.add_argument("--text", required=True, help="text permutation")
    p.add_argument("--oracle", action="store_true",
                   help="force the brute-force reference (small inputs only)")
    _add_common(p)
    p.set_defaults(handler=cmd_match)

    p = subs.add_parser("longest", help="longest wedge subsequence")
    p.add_argument("text", help="text permutation")
    _add_common(p)
    p.set_defaults(handler=cmd_longest)

    p = subs.add_parser("lcs", help="longest common wedge pattern of two texts")
    p.add_argument("text1", help="first permutation")
    p.add_argument("text2", help="second permutation")
    _add_common(p)
    p.set_defaults(handler=cmd_lcs)

    p = subs.add_parser("gen", help="sample random wedge permutations")
    p.add_argument("n", type=int, help="permutation size")
    p.add_argument("--count", type=int, default=1, help="how many to sample")
    p.add_argument("--seed", type=int, default=None, help="random seed")
    _add_common(p)
    p.set_defaults(handler=cmd_gen)

    p = subs.add_parser("enum", help="count wedge permutations of size n")
    p.add_argument("n", type=int, help="permutation size")
    p.add_argument("--list", action="store_true",
                   help=f"also list every member (n <= {_ENUM_LIST_LIMIT})")
    _add_common(p)
    p.set_defaults(handler=cmd_enum)

    p = subs.add_parser("show", help="draw a permutation as an ASCII grid")
    p.add_argument("perm", help="permutation to draw")
    _add_common(p)
    p.set_defaults(handler=cmd_show)

    p = subs.add_parser("bench", help="time the matchers over a size sweep")
    p.add_argument("--algorithm", choices=("scan", "factor-dp"), default="scan",
                   help="scan: wedge texts, one-pass matcher; "
                        "factor-dp: arbitrary texts, factor DP")
    p.add_argument("--pattern", default="1 3 2", help="wedge pattern to match")
    p.add_argument("--sizes", type=_sizes, default=[1000, 10000, 100000],
                   help="comma-separated text sizes")
    p.add_argument("--count", type=int, default=5, help="instances per size")
    p.add_argument("--seed", type=int, default=0, help="random seed")
    p.add_argument("--batch", default=None, metavar="FILE",
                   help="read texts from FILE (one permutation per line) "
                        "instead of sampling")
    p.add_argument("--parallel", type=int, default=1, metavar="W",
                   help="fan size buckets across W worker processes")
    _add_common(p)
    p.set_defaults(handler=cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler: Callable[[argparse.Namespace], RunReport] = args.handler
    try:
        report = handler(args)
    except (CliError, ClassViolation, SizeGuard, ValueError, OSError) as exc:
        print(f"wedgematch: error: {exc}", file=sys.stderr)
        return 2
    print(report.to_json() if args.json else report.to_text())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
