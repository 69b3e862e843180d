from __future__ import annotations

import hashlib
import json
import logging
import sys
from pathlib import Path
from typing import Sequence, TextIO

from stabgraph.classifier import classify_full
from stabgraph.constants import DEFAULT_TREE_NMAX
from stabgraph.encoding import GraphFormatError, parse_edge_lists, parse_graph6_lines, to_graph6
from stabgraph.graph import Graph, GraphError
from stabgraph.populations import enumerate_graphs, random_graphs
from stabgraph.report import (
    GraphRecord,
    ReportDocument,
    get_version,
    render_dot,
    render_text,
    render_verification_text,
    verification_to_dict,
)
from stabgraph.stable_sets import BudgetExceededError
from stabgraph.suites import SUITES, VerificationOutcome, resolve_suite_ids, run_suite

logger = logging.getLogger(__name__)

PROG_NAME = "stabgraph"

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3

INPUT_FORMATS = ("graph6", "edgelist")
OUTPUT_FORMATS = ("json", "text", "dot")


def _error(message: str) -> None:
    print(f"{PROG_NAME}: error: {message}", file=sys.stderr)


def _read_input(path: Path | str | None) -> tuple[str, bytes]:
    if path is None or str(path) == "-":
        return "<stdin>", sys.stdin.buffer.read()
    path = Path(path).expanduser()
    if not path.exists():
        raise FileNotFoundError(f"file '{path}' not found")
    if not path.is_file():
        raise IsADirectoryError(f"'{path}' is not a file")
    return str(path), path.read_bytes()


def parse_graphs(data: bytes, fmt: str) -> list[Graph]:
    if fmt == "graph6":
        return parse_graph6_lines(data)
    if fmt == "edgelist":
        try:
            text = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise GraphFormatError(f"Edge list is not ASCII: {exc}") from exc
        return parse_edge_lists(text)
    raise ValueError(f"Unknown input format {fmt!r}")


def classify_source(
    data: bytes,
    *,
    fmt: str = "graph6",
    source: str = "<stdin>",
    cap: int | None = None,
) -> ReportDocument:
    """Classify every graph in ``data`` and collect the results in a report."""
    graphs = parse_graphs(data, fmt)
    logger.info("Classifying %d graph(s) from %s", len(graphs), source)
    records = [GraphRecord.from_report(to_graph6(g), classify_full(g, cap=cap)) for g in graphs]
    return ReportDocument(
        tool_version=get_version(),
        source=source,
        sha256=hashlib.sha256(data).hexdigest(),
        graphs=tuple(records),
    )


def cmd_classify(
    path: Path | str | None,
    *,
    fmt: str = "graph6",
    output: str = "json",
    cap: int | None = None,
    out: TextIO | None = None,
) -> int:
    out = sys.stdout if out is None else out
    try:
        source, data = _read_input(path)
        document = classify_source(data, fmt=fmt, source=source, cap=cap)
    except (GraphFormatError, GraphError) as e:
        _error(str(e))
        return EXIT_INPUT_ERROR
    except OSError as e:
        _error(f"failed to read input: {e}")
        return EXIT_INPUT_ERROR
    except BudgetExceededError as e:
        _error(str(e))
        return EXIT_BUDGET

    if output == "json":
        out.write(document.to_json())
    elif output == "text":
        out.write(render_text(document))
    else:
        out.write(render_dot(document))
    return EXIT_OK


def verify_suites(
    suite_ids: Sequence[str],
    *,
    nmax: int,
    seed: int,
    canonical: bool = False,
    tree_nmax: int = DEFAULT_TREE_NMAX,
    labeled_trees: bool = False,
    random_count: int = 0,
    jobs: int = 1,
    progress: bool = False,
) -> list[VerificationOutcome]:
    return [
        run_suite(
            suite_id,
            nmax=nmax,
            canonical=canonical,
            tree_nmax=tree_nmax,
            labeled_trees=labeled_trees,
            random_count=random_count,
            seed=seed,
            jobs=jobs,
            progress=progress,
        )
        for suite_id in suite_ids
    ]


def _suite_catalogue() -> str:
    width = max(len(suite_id) for suite_id in SUITES)
    return "".join(f"{suite_id:<{width}}  {suite.title}\n" for suite_id, suite in SUITES.items())


def cmd_verify(
    suites: str = "all",
    *,
    nmax: int,
    seed: int,
    canonical: bool = False,
    tree_nmax: int = DEFAULT_TREE_NMAX,
    labeled_trees: bool = False,
    random_count: int = 0,
    jobs: int = 1,
    progress: bool = False,
    as_json: bool = False,
    list_only: bool = False,
    out: TextIO | None = None,
) -> int:
    out = sys.stdout if out is None else out
    if list_only:
        out.write(_suite_catalogue())
        return EXIT_OK
    try:
        suite_ids = resolve_suite_ids(suites)
        outcomes = verify_suites(
            suite_ids,
            nmax=nmax,
            seed=seed,
            canonical=canonical,
            tree_nmax=tree_nmax,
            labeled_trees=labeled_trees,
            random_count=random_count,
            jobs=jobs,
            progress=progress,
        )
    except KeyError as e:
        _error(e.args[0])
        return EXIT_INPUT_ERROR
    except GraphError as e:
        _error(str(e))
        return EXIT_INPUT_ERROR
    except BudgetExceededError as e:
        _error(str(e))
        return EXIT_BUDGET

    if as_json:
        document = verification_to_dict(
            outcomes,
            nmax=nmax,
            seed=seed,
            canonical=canonical,
            random_count=random_count,
            tree_nmax=tree_nmax,
            labeled_trees=labeled_trees,
        )
        out.write(json.dumps(document, indent=2) + "\n")
    else:
        out.write(render_verification_text(outcomes))
    if any(not outcome.holds for outcome in outcomes):
        return EXIT_VIOLATIONS
    return EXIT_OK


def cmd_enum(n: int, *, canonical: bool = False, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    try:
        for graph in enumerate_graphs(n, canonical=canonical):
            out.write(to_graph6(graph) + "\n")
    except GraphError as e:
        _error(str(e))
        return EXIT_INPUT_ERROR
    return EXIT_OK


def cmd_random(
    n: int,
    count: int,
    p: float,
    seed: int,
    *,
    out: TextIO | None = None,
) -> int:
    out = sys.stdout if out is None else out
    try:
        for graph in random_graphs(n, count, p, seed):
            out.write(to_graph6(graph) + "\n")
    except GraphError as e:
        _error(str(e))
        return EXIT_INPUT_ERROR
    return EXIT_OK
