import json
import os
import subprocess
import sys

from stabgraph.encoding import to_edge_list, to_graph6
from stabgraph.named import make_named
from stabgraph.populations import random_graphs


def _run(*args: str, stdin: str | None = None, env: dict[str, str] | None = None):
    return subprocess.run(
        [sys.executable, "-m", "stabgraph.cli", *args],
        input=stdin,
        capture_output=True,
        text=True,
        env=env,
    )


def test_classify_reads_stdin():
    result = _run("classify", stdin="C~\n")

    assert result.returncode == 0
    document = json.loads(result.stdout)
    assert document["tool"]["name"] == "stabgraph"
    assert document["input"]["source"] == "<stdin>"
    (record,) = document["graphs"]
    assert record["alpha"] == 1
    assert record["plus_plus"] is True


def test_classify_edge_list_file(tmp_path):
    path = tmp_path / "g1.txt"
    path.write_text(to_edge_list(make_named("G1")), encoding="ascii")

    result = _run("classify", "--format", "edgelist", str(path))

    assert result.returncode == 0
    (record,) = json.loads(result.stdout)["graphs"]
    assert record["n"] == 8
    assert record["ke"] is True
    assert record["p3_plus"] is True
    assert record["plus_plus"] is False
    assert len(record["witnesses"]["plus_plus"]) == 2


def test_classify_stream(tmp_path):
    path = tmp_path / "stream.g6"
    path.write_text("".join(to_graph6(g) + "\n" for g in random_graphs(7, 100, 0.4, seed=3)))

    result = _run("classify", str(path))

    assert result.returncode == 0
    document = json.loads(result.stdout)
    assert len(document["graphs"]) == 100
    assert document["summary"]["graphs"] == 100


def test_classify_text_output():
    result = _run("classify", "--output", "text", stdin="Cr\n")

    assert result.returncode == 0
    assert result.stdout.startswith("=== 1 graph(s) from <stdin> ===")
    assert "=== Summary ===" in result.stdout


def test_classify_rejects_malformed_graph6():
    result = _run("classify", stdin="C~\nC~~\n")

    assert result.returncode == 2
    assert "stabgraph: error: line 2:" in result.stderr
    assert result.stdout == ""


def test_classify_missing_file(tmp_path):
    result = _run("classify", str(tmp_path / "absent.g6"))

    assert result.returncode == 2
    assert "not found" in result.stderr


def test_classify_budget_exceeded():
    env = dict(os.environ, STABILITY_BUDGET="1")

    result = _run("classify", stdin="C~\n", env=env)

    assert result.returncode == 3
    assert "STABILITY_BUDGET" in result.stderr


def test_verify_suite():
    result = _run("verify", "--suite", "th2", "--nmax", "4")

    assert result.returncode == 0
    assert result.stdout.startswith("th2: ok (74 graphs, 0 violation(s))")


def test_verify_json():
    result = _run("verify", "--suite", "th2,cycle_parity", "--nmax", "3", "--json")

    assert result.returncode == 0
    document = json.loads(result.stdout)
    assert [suite["id"] for suite in document["suites"]] == ["th2", "cycle_parity"]
    assert document["summary"]["violations"] == 0


def test_verify_list():
    result = _run("verify", "--list")

    assert result.returncode == 0
    ids = [line.split()[0] for line in result.stdout.splitlines()]
    assert "th2" in ids
    assert "cycle_parity" in ids


def test_verify_unknown_suite():
    result = _run("verify", "--suite", "nope")

    assert result.returncode == 2
    assert "stabgraph: error: Unknown suite id(s): nope" in result.stderr


def test_enum_prints_every_labeled_graph():
    result = _run("enum", "--n", "3")

    assert result.returncode == 0
    assert len(result.stdout.splitlines()) == 8


def test_enum_rejects_large_orders():
    result = _run("enum", "--n", "12")

    assert result.returncode == 2
    assert "stabgraph: error:" in result.stderr


def test_random_complete_graphs():
    result = _run("random", "--n", "4", "--count", "3", "--p", "1")

    assert result.returncode == 0
    assert result.stdout.splitlines() == ["C~"] * 3


def test_version():
    result = _run("-V")

    assert result.returncode == 0
    assert result.stdout.startswith("stabgraph ")


def test_bad_arguments_exit_with_usage():
    result = _run("random", "--n", "4", "--p", "2")

    assert result.returncode == 2
    assert "stabgraph random: error:" in result.stderr
    assert "For help, run: stabgraph random -h" in result.stderr


def test_missing_command():
    result = _run()

    assert result.returncode == 2
    assert "For help, run: stabgraph -h" in result.stderr


def test_verify_rejects_nmax_beyond_enumeration():
    result = _run("verify", "--suite", "th2", "--nmax", "12")

    assert result.returncode == 2
    assert "stabgraph: error: nmax must be between 2 and 8, got 12" in result.stderr
    assert result.stdout == ""


def test_verify_over_labeled_trees():
    result = _run("verify", "--suite", "tree", "--tree-nmax", "5", "--labeled-trees", "--json")

    assert result.returncode == 0
    document = json.loads(result.stdout)
    assert document["parameters"]["labeled_trees"] is True
    assert document["suites"][0]["population"] == "labeled trees 2<=n<=5 (Prüfer)"
    assert document["suites"][0]["checked"] == 1 + 3 + 16 + 125
