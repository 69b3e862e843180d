import json
from pathlib import Path

import jsonschema

from stabgraph.classifier import PlusClass
from stabgraph.encoding import to_graph6
from stabgraph.named import cycle, make_named
from stabgraph.report import (
    GraphRecord,
    ReportDocument,
    render_dot,
    render_text,
    render_verification_text,
    verification_to_dict,
)
from stabgraph.runner import classify_source
from stabgraph.suites import run_suite

SCHEMA_PATH = Path(__file__).resolve().parents[1] / "docs" / "report-schema.json"


def _source(*graphs) -> bytes:
    return "".join(to_graph6(g) + "\n" for g in graphs).encode("ascii")


def _document() -> ReportDocument:
    return classify_source(
        _source(cycle(5), cycle(4), make_named("K3_PLUS_E")), source="fixtures.g6"
    )


def test_records_are_sorted_by_graph6() -> None:
    document = _document()
    codes = [record.graph6 for record in document.graphs]

    assert codes == sorted(codes)
    assert len(codes) == 3


def test_summary_counts() -> None:
    summary = _document().summary()

    assert summary == {
        "graphs": 3,
        "ke": 2,
        "p3_plus": 2,
        "plus_plus": 1,
        "alpha0_plus": 2,
        "alpha1_plus": 1,
        "not_plus": 0,
    }


def test_json_round_trip() -> None:
    document = _document()

    assert ReportDocument.from_json(document.to_json()) == document
    assert document.to_json().endswith("}\n")


def test_input_is_fingerprinted() -> None:
    data = _source(cycle(5))
    first = classify_source(data)
    second = classify_source(data + b"\n")

    assert len(first.sha256) == 64
    assert first.sha256 != second.sha256
    assert first.graphs == second.graphs


def test_document_matches_schema() -> None:
    schema = json.loads(SCHEMA_PATH.read_text())
    payload = json.loads(_document().to_json())

    jsonschema.validate(payload, schema)


def test_record_serialises_witnesses_as_lists() -> None:
    record = next(r for r in _document().graphs if r.plus is PlusClass.ALPHA1_PLUS)
    data = record.to_dict()

    assert data["plus"] == "ALPHA1_PLUS"
    assert data["witnesses"]["p3_plus"] == [[1, 3], [2, 3]]
    assert GraphRecord.from_dict(data) == record


def test_render_text() -> None:
    text = render_text(_document())
    lines = text.splitlines()

    assert lines[0] == "=== 3 graph(s) from fixtures.g6 ==="
    assert f"{to_graph6(cycle(4))}: n=4 alpha=2 mu=2 xi=0 |Omega|=2 ke=yes" in lines
    assert "  witness plus_plus: 0-2 1-3" in lines
    assert lines[-2] == "=== Summary ==="
    assert lines[-1].startswith("graphs=3 ke=2")


def test_render_dot() -> None:
    dot = render_dot(_document())

    assert dot.count("graph g") == 3
    assert "g0" in dot and "g2" in dot


def test_verification_document() -> None:
    outcomes = [run_suite("th2", nmax=3), run_suite("cycle_parity")]
    data = verification_to_dict(outcomes, nmax=3, seed=0, canonical=False, random_count=0)

    assert data["parameters"] == {
        "nmax": 3,
        "seed": 0,
        "canonical": False,
        "random": 0,
        "tree_nmax": 9,
        "labeled_trees": False,
    }
    assert [suite["id"] for suite in data["suites"]] == ["th2", "cycle_parity"]
    assert all(suite["holds"] for suite in data["suites"])
    assert data["summary"] == {"suites": 2, "checked": 2 + 8 + 10, "violations": 0}


def test_render_verification_text() -> None:
    text = render_verification_text([run_suite("cycle_parity")])

    assert text.startswith("cycle_parity: ok (10 graphs, 0 violation(s)) over cycles 4<=n<=13")
    assert text.endswith("=== 1 suite(s), 0 violation(s) ===\n")
