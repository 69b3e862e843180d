from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Severity(Enum):
    ERROR = "error"
    INFO = "info"


@dataclass(frozen=True, slots=True)
class RelatedInfo:
    message: str
    graph6: str


@dataclass(frozen=True, slots=True)
class Diagnostic:
    code: str
    message: str
    severity: Severity
    graph6: str
    related: tuple[RelatedInfo, ...] = ()

    def __str__(self) -> str:
        prefix = f"[{self.code}] {self.severity.value}: {self.message} at {self.graph6}"
        if self.related:
            related_strs = [f"  - {r.message} at {r.graph6}" for r in self.related]
            return prefix + "\n" + "\n".join(related_strs)
        return prefix


class DiagnosticCollector:
    def __init__(self) -> None:
        self._diagnostics: list[Diagnostic] = []
        self._graph_primary: dict[str, Diagnostic] = {}

    @property
    def diagnostics(self) -> list[Diagnostic]:
        return list(self._diagnostics)

    def has_errors(self) -> bool:
        return any(d.severity == Severity.ERROR for d in self._diagnostics)

    def notes(self) -> list[Diagnostic]:
        return [d for d in self._diagnostics if d.severity != Severity.ERROR]

    def add(
        self,
        code: str,
        message: str,
        severity: Severity,
        graph6: str,
        related: tuple[RelatedInfo, ...] = (),
    ) -> Diagnostic:
        diag = Diagnostic(
            code=code,
            message=message,
            severity=severity,
            graph6=graph6,
            related=related,
        )
        self._diagnostics.append(diag)
        return diag

    def add_error(self, code: str, message: str, graph6: str) -> Diagnostic:
        related: tuple[RelatedInfo, ...] = ()
        primary = self._graph_primary.get(graph6)
        if primary is not None:
            related = (
                RelatedInfo(
                    message=f"Same graph already violates {primary.code}.",
                    graph6=graph6,
                ),
            )
        diag = self.add(code, message, Severity.ERROR, graph6, related)
        self._graph_primary.setdefault(graph6, diag)
        return diag

    def add_info(self, code: str, message: str, graph6: str) -> Diagnostic:
        return self.add(code, message, Severity.INFO, graph6)

    def sorted(self) -> list[Diagnostic]:
        return sorted(self._diagnostics, key=lambda d: (d.graph6, d.code, d.message))

    def clear(self) -> None:
        self._diagnostics.clear()
        self._graph_primary.clear()
