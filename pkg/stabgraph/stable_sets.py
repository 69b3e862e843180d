from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from typing import Any, Iterable, Iterator

from stabgraph.bitset import bit, iter_bits, popcount, to_frozenset
from stabgraph.constants import DEFAULT_OMEGA_CAP, OMEGA_CAP_ENV
from stabgraph.graph import Graph

logger = logging.getLogger(__name__)


class BudgetExceededError(RuntimeError):
    def __init__(self, cap: int, what: str = "maximum stable sets") -> None:
        self.cap = cap
        super().__init__(
            f"More than {cap} {what}; set {OMEGA_CAP_ENV} to raise the limit"
        )


@dataclass(frozen=True, slots=True)
class Verdict:
    holds: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True, slots=True)
class StableSetFamily:
    """Omega(G): every maximum stable set, ordered by bitmask value."""

    alpha: int
    sets: tuple[int, ...]
    core: int

    @property
    def xi(self) -> int:
        return popcount(self.core)

    def __len__(self) -> int:
        return len(self.sets)

    def containing(self, mask: int) -> tuple[int, ...]:
        return tuple(s for s in self.sets if s & mask == mask)

    def as_frozensets(self) -> list[frozenset[int]]:
        return [to_frozenset(s) for s in self.sets]


def family_core(sets: Iterable[int]) -> int:
    core = -1
    seen = False
    for s in sets:
        core &= s
        seen = True
    if not seen:
        raise ValueError("Core of an empty family is undefined")
    return core


def resolve_omega_cap(cap: int | None = None) -> int:
    if cap is not None:
        if cap < 1:
            raise ValueError(f"Enumeration cap must be positive, got {cap}")
        return cap
    raw = os.environ.get(OMEGA_CAP_ENV, "").strip()
    if not raw:
        return DEFAULT_OMEGA_CAP
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{OMEGA_CAP_ENV} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{OMEGA_CAP_ENV} must be a positive integer, got {raw!r}")
    return value


def _alpha(adj: tuple[int, ...], mask: int) -> int:
    count = 0
    while mask:
        # a vertex of degree <= 1 lies in some maximum stable set
        for v in iter_bits(mask):
            if popcount(adj[v] & mask) <= 1:
                count += 1
                mask &= ~(adj[v] | bit(v))
                break
        else:
            break
    if not mask:
        return count
    v = max(iter_bits(mask), key=lambda u: popcount(adj[u] & mask))
    without = _alpha(adj, mask & ~bit(v))
    with_v = 1 + _alpha(adj, mask & ~(adj[v] | bit(v)))
    return count + max(without, with_v)


def stability_number(graph: Graph, *, within: int | None = None) -> int:
    mask = graph.full_mask if within is None else within & graph.full_mask
    return _alpha(graph.adj, mask)


def max_stable_sets(graph: Graph, *, cap: int | None = None) -> StableSetFamily:
    limit = resolve_omega_cap(cap)
    adj = graph.adj
    alpha = _alpha(adj, graph.full_mask)
    found: list[int] = []

    def extend(chosen: int, size: int, candidates: int) -> None:
        if size == alpha:
            found.append(chosen)
            if len(found) > limit:
                raise BudgetExceededError(limit)
            return
        if size + popcount(candidates) < alpha:
            return
        if size + _alpha(adj, candidates) < alpha:
            return
        for v in iter_bits(candidates):
            above = candidates & ~((bit(v) << 1) - 1)
            if size + 1 + popcount(above) < alpha:
                break
            extend(chosen | bit(v), size + 1, above & ~adj[v])

    extend(0, 0, graph.full_mask)
    found.sort()
    logger.debug("Enumerated %d maximum stable sets (n=%d, alpha=%d)", len(found), graph.n, alpha)
    return StableSetFamily(alpha, tuple(found), family_core(found))


def _iter_maximal(graph: Graph) -> Iterator[int]:
    full = graph.full_mask
    # Bron-Kerbosch with pivoting, run on the complement graph
    non_adj = [full & ~graph.adj[v] & ~bit(v) for v in graph.vertices]

    def expand(chosen: int, pool: int, excluded: int) -> Iterator[int]:
        if not pool and not excluded:
            yield chosen
            return
        pivot = max(iter_bits(pool | excluded), key=lambda u: popcount(pool & non_adj[u]))
        for v in iter_bits(pool & ~non_adj[pivot]):
            yield from expand(chosen | bit(v), pool & non_adj[v], excluded & non_adj[v])
            pool &= ~bit(v)
            excluded |= bit(v)

    yield from expand(0, full, 0)


def maximal_stable_sets(graph: Graph, *, cap: int | None = None) -> tuple[int, ...]:
    limit = resolve_omega_cap(cap)
    found: list[int] = []
    for s in _iter_maximal(graph):
        found.append(s)
        if len(found) > limit:
            raise BudgetExceededError(limit, "maximal stable sets")
    found.sort()
    return tuple(found)


def is_well_covered(graph: Graph, *, cap: int | None = None) -> bool:
    limit = resolve_omega_cap(cap)
    alpha = stability_number(graph)
    for count, s in enumerate(_iter_maximal(graph), start=1):
        if popcount(s) < alpha:
            return False
        if count > limit:
            raise BudgetExceededError(limit, "maximal stable sets")
    return True


def is_very_well_covered(graph: Graph, *, cap: int | None = None) -> bool:
    return graph.n == 2 * stability_number(graph) and is_well_covered(graph, cap=cap)


def core_avoidable_pairs(graph: Graph, family: StableSetFamily) -> Verdict:
    """Check that every pair x, y (x == y allowed) misses some maximum stable set.

    The witness of a failure is the first offending pair (x, y), x <= y.
    """
    for x in graph.vertices:
        for y in range(x, graph.n):
            pair = bit(x) | bit(y)
            if not any(not s & pair for s in family.sets):
                return Verdict(False, (x, y))
    return Verdict(True)
