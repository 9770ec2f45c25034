"""Command-line front end: dispatch, exit codes, report stability."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from wedgematch.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# dispatch and exit codes


def test_match_selects_word_scan_for_wedge_text(capsys):
    code, out, _ = run_cli(capsys, "match", "--pattern", "1 2", "--text", "1 3 2")
    assert code == 0
    assert "algorithm: word-scan" in out
    assert "embedding: 1 2" in out


def test_match_selects_factor_dp_for_general_text(capsys):
    code, out, _ = run_cli(capsys, "match", "--pattern", "1 3 2",
                           "--text", "2 4 1 5 3")
    assert code == 0
    assert "algorithm: factor-dp" in out
    assert "embedding: 1 2 5" in out
    assert "values: 2 4 3" in out


def test_match_selects_window_dp_for_wedge_bottoms(capsys):
    code, out, _ = run_cli(capsys, "match", "--pattern", "bottom=1 2; pos_adj=1",
                           "--text", "1 3 2")
    assert code == 0
    assert "algorithm: window-dp" in out
    assert "embedding: 1 2" in out


def test_match_falls_back_for_non_wedge_bottoms(capsys):
    code, out, _ = run_cli(
        capsys, "match",
        "--pattern", "bottom=2 1 4 3; first; pos_adj=3; val_adj=2; max_anchor",
        "--text", "3 2 1 7 8 4 5")
    assert code == 0
    assert "algorithm: fallback-search" in out
    assert "embedding: 1 2 5 6" in out
    assert "values: 3 2 8 4" in out


def test_match_no_match_exits_one(capsys):
    code, out, _ = run_cli(capsys, "match", "--pattern", "1 2", "--text", "2 1")
    assert code == 1
    assert "decision: no" in out


def test_match_oracle_flag_forces_brute_force(capsys):
    code, out, _ = run_cli(capsys, "match", "--pattern", "2 1 3",
                           "--text", "5 2 1 4 3", "--oracle")
    assert code == 0
    assert "algorithm: oracle" in out
    assert "embedding: 2 3 4" in out


def test_match_rejects_non_wedge_plain_pattern(capsys):
    code, out, err = run_cli(capsys, "match", "--pattern", "2 1 3",
                             "--text", "1 2 3")
    assert code == 2
    assert out == ""
    assert "not a wedge permutation" in err


def test_match_oracle_respects_size_guard(capsys):
    huge = " ".join(str(v) for v in range(1, 46))
    code, _, err = run_cli(capsys, "match", "--pattern", "1 2", "--text", huge,
                           "--oracle")
    assert code == 2
    assert "guard" in err


@pytest.mark.parametrize("pattern,text", [
    ("1 2 x", "1 2 3"),
    ("1 2 2", "1 2 3"),
    ("", "1 2 3"),
    ("1 2", "1 1 2"),
    ("bottom=1 2; sideways", "1 2 3"),
    ("bottom=1 2; pos_adj=5", "1 2 3"),
])
def test_malformed_inputs_exit_two(capsys, pattern, text):
    code, _, err = run_cli(capsys, "match", "--pattern", pattern, "--text", text)
    assert code == 2
    assert err.startswith("wedgematch: error:")


def test_unknown_subcommand_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# other commands


def test_longest_reports_positions_and_values(capsys):
    code, out, _ = run_cli(capsys, "longest", "3 9 1 8 6 7 4 5 2")
    assert code == 0
    assert "length: 6" in out


def test_lcs_reports_common_pattern(capsys):
    code, out, _ = run_cli(capsys, "lcs", "1 2 3", "3 2 1")
    assert code == 0
    assert "length: 1" in out
    assert "pattern: 1" in out


def test_enum_counts_without_listing(capsys):
    code, out, _ = run_cli(capsys, "enum", "10")
    assert code == 0
    assert out.strip() == "count: 512"


def test_enum_listing_is_complete_and_capped(capsys):
    code, out, _ = run_cli(capsys, "enum", "4", "--list")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "count: 8"
    assert len(lines) == 9
    assert lines[1] == "1 2 3 4" and lines[-1] == "4 3 2 1"
    code, _, err = run_cli(capsys, "enum", "17", "--list")
    assert code == 2
    assert "capped" in err


def test_gen_is_reproducible_and_in_class(capsys):
    from wedgematch import is_av_213_231, parse_permutation

    code, first, _ = run_cli(capsys, "gen", "9", "--count", "4", "--seed", "3")
    assert code == 0
    code, second, _ = run_cli(capsys, "gen", "9", "--count", "4", "--seed", "3")
    assert first == second
    perms = [parse_permutation(line) for line in first.strip().splitlines()]
    assert len(perms) == 4
    assert all(p.n == 9 and is_av_213_231(p) for p in perms)


def test_show_draws_the_grid(capsys):
    code, out, _ = run_cli(capsys, "show", "4 1 3 2")
    assert code == 0
    lines = out.strip().splitlines()
    assert "word: DAD" in lines
    assert "wedge: yes" in lines
    assert "4 | * . . ." in lines
    assert "1 | . * . ." in lines


def test_bench_scan_reports_each_size(capsys):
    code, out, _ = run_cli(capsys, "bench", "--sizes", "50,100", "--count", "3",
                           "--seed", "1")
    assert code == 0
    lines = [l for l in out.strip().splitlines() if l.startswith("n=")]
    assert len(lines) == 2
    assert "steps-mean" in lines[0]


def test_bench_factor_dp_with_batch_file(capsys, tmp_path):
    batch = tmp_path / "texts.txt"
    batch.write_text("2 4 1 5 3\n3 1 2\n5 4 3 2 1\n")
    code, out, _ = run_cli(capsys, "bench", "--algorithm", "factor-dp",
                           "--batch", str(batch))
    assert code == 0
    lines = [l for l in out.strip().splitlines() if l.startswith("n=")]
    assert len(lines) == 2  # two distinct sizes in the file
    code, _, err = run_cli(capsys, "bench", "--batch", str(tmp_path / "missing"))
    assert code == 2


def test_bench_parallel_workers(capsys):
    code, out, _ = run_cli(capsys, "bench", "--sizes", "30,60", "--count", "2",
                           "--seed", "5", "--parallel", "2")
    assert code == 0
    assert len([l for l in out.strip().splitlines() if l.startswith("n=")]) == 2


def test_bench_rejects_non_wedge_pattern(capsys):
    code, _, err = run_cli(capsys, "bench", "--pattern", "2 1 3")
    assert code == 2
    assert "wedge" in err


# ---------------------------------------------------------------------------
# JSON reports


def test_json_report_shape_and_stability(capsys):
    argv = ("match", "--pattern", "1 3 2", "--text", "2 4 1 5 3", "--json")
    code, out, _ = run_cli(capsys, *argv)
    assert code == 0
    payload = json.loads(out)
    assert list(payload) == ["command", "inputs", "algorithm", "decision",
                             "embedding", "values", "elapsed_ms"]
    assert payload["decision"] is True
    assert payload["embedding"] == [1, 2, 5]
    assert payload["values"] == [2, 4, 3]
    assert payload["elapsed_ms"] is None
    code, again, _ = run_cli(capsys, *argv)
    assert again == out


def test_json_timing_flag_fills_elapsed(capsys):
    code, out, _ = run_cli(capsys, "match", "--pattern", "1 2", "--text", "1 2",
                           "--json", "--timing")
    assert code == 0
    payload = json.loads(out)
    assert isinstance(payload["elapsed_ms"], float)
    _, out2, _ = run_cli(capsys, "match", "--pattern", "1 2", "--text", "1 2",
                         "--timing")
    assert "elapsed_ms:" in out2


def test_json_gen_binds_inputs(capsys):
    code, out, _ = run_cli(capsys, "gen", "6", "--count", "2", "--seed", "11",
                           "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["inputs"] == {"n": 6, "count": 2, "seed": 11}
    assert len(payload["permutations"]) == 2


def test_json_bench_rows(capsys):
    code, out, _ = run_cli(capsys, "bench", "--sizes", "40", "--count", "2",
                           "--seed", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert [row["n"] for row in payload["results"]] == [40]
    assert payload["results"][0]["count"] == 2


# ---------------------------------------------------------------------------
# installed entry point


def test_console_script_is_wired():
    proc = subprocess.run(
        [sys.executable, "-m", "wedgematch.cli", "match",
         "--pattern", "1 2", "--text", "1 3 2", "--json"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["algorithm"] == "word-scan"
    assert payload["embedding"] == [1, 2]
