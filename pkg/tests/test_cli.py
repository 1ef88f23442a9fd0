"""Command-line behavior: piping, formats, report stability, exit codes."""

from __future__ import annotations

import json
import random
import subprocess

import pytest
from conftest import random_graph

from trifree.cli import main
from trifree.formats import (
    FormatError,
    parse_elist,
    parse_graph6,
    write_elist,
    write_graph6,
)
from trifree.graph import from_edge_list


def run_cli(args, stdin: str = "") -> subprocess.CompletedProcess:
    return subprocess.run(
        ["trifree", *args], input=stdin, capture_output=True, text=True, timeout=300
    )


def test_serialization_round_trip_200_random_graphs():
    rng = random.Random(401)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 14))
        assert parse_elist(write_elist(g)).adj == g.adj
        assert parse_graph6(write_graph6(g)).adj == g.adj


def test_graph6_hand_encodings():
    assert write_graph6(from_edge_list(2, [(0, 1)])) == "A_"
    assert write_graph6(from_edge_list(3, [(0, 1), (1, 2)])) == "Bg"
    assert write_graph6(from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])) == "Dhc"


def test_elist_rejects_malformed_input():
    for text in ("", "e 0 1", "p tf 2\ne 0 1\ne 0 1", "p tf two", "q tf 2"):
        with pytest.raises(FormatError):
            parse_elist(text)


def test_gen_pipe_check_holds():
    gen = run_cli(["gen", "andrasfai", "--k", "2"])
    assert gen.returncode == 0
    check = run_cli(["check", "--d", "4"], stdin=gen.stdout)
    assert check.returncode == 0
    report = json.loads(check.stdout)
    assert report["command"] == "check"
    assert report["verdict"]["holds"] is True


def test_gen_fig41_check_fails_with_witness():
    gen = run_cli(["gen", "fig41"])
    check = run_cli(["check", "--d", "4"], stdin=gen.stdout)
    assert check.returncode == 1
    report = json.loads(check.stdout)
    assert report["verdict"]["holds"] is False
    assert report["verdict"]["witness"] is not None


def test_recognize_haggkvist_graph():
    gen = run_cli(["gen", "haggkvist"])
    rec = run_cli(["recognize"], stdin=gen.stdout)
    assert rec.returncode == 0
    report = json.loads(rec.stdout)
    assert report["certificate"]["family"] == {"i": 2, "kind": "vega", "mu": 1, "nu": 1}


def test_recognize_refutes_non_maximal_input():
    rec = run_cli(["recognize"], stdin="p tf 4\ne 0 1\ne 1 2\ne 2 3\n")
    assert rec.returncode == 1
    assert json.loads(rec.stdout)["refutation"]["kind"] == "not_maximal_triangle_free"


def test_graph6_format_flag():
    gen = run_cli(["gen", "andrasfai", "--k", "3", "--format", "graph6"])
    assert gen.returncode == 0 and gen.stdout.strip() == "GCrb`o"
    check = run_cli(["check", "--alpha", "--format", "graph6"], stdin=gen.stdout)
    assert check.returncode == 0
    assert json.loads(check.stdout)["verdict"]["alpha"] == 3


def test_gen_blowup_roundtrip():
    gen = run_cli(["gen", "andrasfai", "--k", "2"])
    big = run_cli(["gen", "blowup", "--weights", "2,2,2,2,2"], stdin=gen.stdout)
    assert big.returncode == 0
    rec = run_cli(["recognize"], stdin=big.stdout)
    report = json.loads(rec.stdout)
    assert report["certificate"]["family"] == {"k": 2, "kind": "andrasfai"}
    assert report["certificate"]["weights"] == [2, 2, 2, 2, 2]


def test_dot_export_carries_family_labels():
    dot = run_cli(["gen", "vega", "--i", "2", "--mu", "1", "--nu", "1", "--dot"])
    assert dot.returncode == 0
    for label in ('label="a"', 'label="w"', 'label="x"'):
        assert label in dot.stdout
    assert 'label="y"' not in dot.stdout  # deleted at mu=1


def test_census_reports_are_byte_identical():
    first = run_cli(["census", "--n", "7", "--assert"])
    second = run_cli(["census", "--n", "7", "--assert"])
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    report = json.loads(first.stdout)
    assert report["count"] == 6
    assert all(row["d4"] == (row["recognized"] is not None) for row in report["rows"])


def test_hunt_exits_clean_when_no_counterexamples():
    result = run_cli(["hunt", "--max-n", "7"])
    assert result.returncode == 0
    assert json.loads(result.stdout)["counterexamples"] == []


def test_paper_verify_single_check():
    result = run_cli(["paper-verify", "--check", "edge_identity"])
    assert result.returncode == 0
    report = json.loads(result.stdout)
    assert report["failed"] == []
    assert report["checks"][0]["name"] == "edge_identity"
    assert report["checks"][0]["passed"] is True


def test_extremal_formula_and_search():
    result = run_cli(["extremal", "--n", "10", "--s", "5", "--search"])
    assert result.returncode == 0
    report = json.loads(result.stdout)
    assert report["formula_value"] == 25
    assert report["search"]["best_found"] == 25


def test_exit_codes():
    assert run_cli(["census"]).returncode == 2                      # missing --n
    assert run_cli(["paper-verify", "--check", "bogus"]).returncode == 2
    assert run_cli(["check", "--tf"], stdin="garbage\n").returncode == 3
    assert run_cli(["recognize"], stdin="p tf 1\n").returncode == 3  # too small
    assert run_cli(["census", "--n", "13"]).returncode == 3          # guard
    assert run_cli(["extremal", "--n", "10", "--s", "3"]).returncode == 3
    triangle = "p tf 3\ne 0 1\ne 0 2\ne 1 2\n"
    assert run_cli(["check", "--tf"], stdin=triangle).returncode == 1


def test_timings_flag_is_the_only_instability():
    plain = run_cli(["check", "--maximal"], stdin="p tf 2\ne 0 1\n")
    timed = run_cli(["check", "--maximal", "--timings"], stdin="p tf 2\ne 0 1\n")
    assert "elapsed" not in json.loads(plain.stdout)
    assert "elapsed" in json.loads(timed.stdout)


def test_reports_use_sorted_keys():
    result = run_cli(["check", "--alpha"], stdin="p tf 2\ne 0 1\n")
    report = json.loads(result.stdout)
    assert list(report) == sorted(report)
    assert list(report["verdict"]) == sorted(report["verdict"])


def test_main_entry_point_direct():
    assert main(["gen", "cube", "--out", "/dev/null"]) == 0
