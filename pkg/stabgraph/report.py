"""Report documents for ``stabgraph classify`` and ``stabgraph verify``.

A :class:`ReportDocument` is the serialisable projection of a batch of
:class:`~stabgraph.classifier.StabilityReport` values. Records are kept sorted
by graph6 string so two runs over the same input produce identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib.metadata import PackageNotFoundError, version
from typing import Any, Sequence

from stabgraph.classifier import PlusClass, StabilityReport
from stabgraph.constants import DEFAULT_TREE_NMAX, REPORT_VERSION
from stabgraph.diagnostics import Diagnostic
from stabgraph.encoding import parse_graph6, to_dot
from stabgraph.graph import Edge
from stabgraph.suites import VerificationOutcome

TOOL_NAME = "stabgraph"


def get_version() -> str:
    try:
        return version(TOOL_NAME)
    except PackageNotFoundError:
        return "dev"


@dataclass(frozen=True, slots=True)
class GraphRecord:
    graph6: str
    n: int
    alpha: int
    mu: int
    ke: bool
    xi: int
    omega_size: int
    plus: PlusClass
    p3_plus: bool
    plus_plus: bool
    witnesses: dict[str, tuple[Edge, ...]] = field(default_factory=dict)
    fast_paths: dict[str, tuple[str, ...]] = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    @classmethod
    def from_report(cls, graph6: str, report: StabilityReport) -> GraphRecord:
        return cls(
            graph6=graph6,
            n=report.n,
            alpha=report.alpha,
            mu=report.mu,
            ke=report.is_ke,
            xi=report.xi,
            omega_size=report.omega_size,
            plus=report.plus,
            p3_plus=report.p3_plus,
            plus_plus=report.plus_plus,
            witnesses=dict(report.witnesses),
            fast_paths=dict(report.fast_paths),
            notes=report.notes,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "alpha": self.alpha,
            "mu": self.mu,
            "ke": self.ke,
            "xi": self.xi,
            "omega_size": self.omega_size,
            "plus": self.plus.value,
            "p3_plus": self.p3_plus,
            "plus_plus": self.plus_plus,
            "witnesses": {
                flag: [list(edge) for edge in edges] for flag, edges in sorted(self.witnesses.items())
            },
            "fast_paths": {flag: list(names) for flag, names in sorted(self.fast_paths.items())},
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> GraphRecord:
        return cls(
            graph6=data["graph6"],
            n=data["n"],
            alpha=data["alpha"],
            mu=data["mu"],
            ke=data["ke"],
            xi=data["xi"],
            omega_size=data["omega_size"],
            plus=PlusClass(data["plus"]),
            p3_plus=data["p3_plus"],
            plus_plus=data["plus_plus"],
            witnesses={
                flag: tuple((u, v) for u, v in edges) for flag, edges in data["witnesses"].items()
            },
            fast_paths={flag: tuple(names) for flag, names in data["fast_paths"].items()},
            notes=tuple(data.get("notes", ())),
        )


@dataclass(frozen=True, slots=True)
class ReportDocument:
    tool_version: str
    source: str
    sha256: str
    graphs: tuple[GraphRecord, ...]
    version: int = REPORT_VERSION

    def __post_init__(self) -> None:
        object.__setattr__(self, "graphs", tuple(sorted(self.graphs, key=lambda r: r.graph6)))

    def summary(self) -> dict[str, int]:
        counts = {
            "graphs": len(self.graphs),
            "ke": sum(r.ke for r in self.graphs),
            "p3_plus": sum(r.p3_plus for r in self.graphs),
            "plus_plus": sum(r.plus_plus for r in self.graphs),
        }
        for cls in PlusClass:
            counts[cls.value.lower()] = sum(r.plus is cls for r in self.graphs)
        return counts

    def to_dict(self) -> dict[str, Any]:
        return {
            "version": self.version,
            "tool": {"name": TOOL_NAME, "version": self.tool_version},
            "input": {"source": self.source, "sha256": self.sha256},
            "graphs": [record.to_dict() for record in self.graphs],
            "summary": self.summary(),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ReportDocument:
        return cls(
            tool_version=data["tool"]["version"],
            source=data["input"]["source"],
            sha256=data["input"]["sha256"],
            graphs=tuple(GraphRecord.from_dict(item) for item in data["graphs"]),
            version=data["version"],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ReportDocument:
        return cls.from_dict(json.loads(text))


def _format_edges(edges: tuple[Edge, ...]) -> str:
    return " ".join(f"{u}-{v}" for u, v in edges)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def render_text(document: ReportDocument) -> str:
    lines: list[str] = [f"=== {len(document.graphs)} graph(s) from {document.source} ==="]
    for record in document.graphs:
        lines.append(
            f"{record.graph6}: n={record.n} alpha={record.alpha} mu={record.mu} "
            f"xi={record.xi} |Omega|={record.omega_size} ke={_yes(record.ke)}"
        )
        lines.append(
            f"  plus={record.plus.value} p3_plus={_yes(record.p3_plus)} "
            f"plus_plus={_yes(record.plus_plus)}"
        )
        for flag, edges in sorted(record.witnesses.items()):
            lines.append(f"  witness {flag}: {_format_edges(edges)}")
        for note in record.notes:
            lines.append(f"  note: {note}")
    summary = document.summary()
    lines.append("=== Summary ===")
    lines.append(" ".join(f"{key}={value}" for key, value in summary.items()))
    return "\n".join(lines) + "\n"


def render_dot(document: ReportDocument) -> str:
    return "".join(
        to_dot(parse_graph6(record.graph6), name=f"g{index}")
        for index, record in enumerate(document.graphs)
    )


# -- verification ----------------------------------------------------------------


def _finding(diag: Diagnostic) -> dict[str, str]:
    return {"graph6": diag.graph6, "detail": diag.message}


def verification_to_dict(
    outcomes: Sequence[VerificationOutcome],
    *,
    nmax: int,
    seed: int,
    canonical: bool,
    random_count: int,
    tree_nmax: int = DEFAULT_TREE_NMAX,
    labeled_trees: bool = False,
) -> dict[str, Any]:
    return {
        "version": REPORT_VERSION,
        "tool": {"name": TOOL_NAME, "version": get_version()},
        "parameters": {
            "nmax": nmax,
            "seed": seed,
            "canonical": canonical,
            "random": random_count,
            "tree_nmax": tree_nmax,
            "labeled_trees": labeled_trees,
        },
        "suites": [
            {
                "id": outcome.theorem_id,
                "title": outcome.title,
                "population": outcome.population,
                "checked": outcome.checked,
                "holds": outcome.holds,
                "violations": [_finding(d) for d in outcome.violations],
                "notes": [_finding(d) for d in outcome.notes],
            }
            for outcome in outcomes
        ],
        "summary": {
            "suites": len(outcomes),
            "checked": sum(outcome.checked for outcome in outcomes),
            "violations": sum(len(outcome.violations) for outcome in outcomes),
        },
    }


def render_verification_text(outcomes: Sequence[VerificationOutcome]) -> str:
    lines: list[str] = []
    for outcome in outcomes:
        status = "ok" if outcome.holds else "FAILED"
        lines.append(
            f"{outcome.theorem_id}: {status} ({outcome.checked} graphs, "
            f"{len(outcome.violations)} violation(s)) over {outcome.population}"
        )
        if outcome.violations:
            lines.append(f"=== {len(outcome.violations)} Violation(s) ===")
            lines.extend(str(d) for d in outcome.violations)
        if outcome.notes:
            lines.append(f"=== {len(outcome.notes)} Note(s) ===")
            lines.extend(str(d) for d in outcome.notes)
    total = sum(len(outcome.violations) for outcome in outcomes)
    lines.append(f"=== {len(outcomes)} suite(s), {total} violation(s) ===")
    return "\n".join(lines) + "\n"
