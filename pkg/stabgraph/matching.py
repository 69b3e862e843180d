from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from stabgraph.bitset import bit, iter_bits, lowest, popcount
from stabgraph.graph import Edge, Graph, normalize_edge, pendant_data
from stabgraph.stable_sets import BudgetExceededError, resolve_omega_cap

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class MatchingResult:
    mu: int
    matching: tuple[Edge, ...]
    perfect: bool
    pendant_perfect: tuple[Edge, ...] | None = None

    @property
    def covered(self) -> int:
        mask = 0
        for u, v in self.matching:
            mask |= bit(u) | bit(v)
        return mask


class _EdmondsMatcher:
    """Edmonds' blossom algorithm, one BFS per exposed vertex."""

    def __init__(self, graph: Graph) -> None:
        self._adj = graph.adj
        self._n = graph.n
        self.match = [-1] * graph.n
        self._parent = [-1] * graph.n
        self._base = list(range(graph.n))
        self._used = [False] * graph.n
        self._blossom = [False] * graph.n

    def run(self) -> list[int]:
        for root in range(self._n):
            if self.match[root] != -1:
                continue
            end = self._find_path(root)
            while end != -1:
                prev = self._parent[end]
                next_end = self.match[prev]
                self.match[end] = prev
                self.match[prev] = end
                end = next_end
        return self.match

    def _lca(self, a: int, b: int) -> int:
        seen = [False] * self._n
        while True:
            a = self._base[a]
            seen[a] = True
            if self.match[a] == -1:
                break
            a = self._parent[self.match[a]]
        while True:
            b = self._base[b]
            if seen[b]:
                return b
            b = self._parent[self.match[b]]

    def _mark_path(self, v: int, stem: int, child: int) -> None:
        while self._base[v] != stem:
            self._blossom[self._base[v]] = True
            self._blossom[self._base[self.match[v]]] = True
            self._parent[v] = child
            child = self.match[v]
            v = self._parent[self.match[v]]

    def _find_path(self, root: int) -> int:
        n = self._n
        self._used = [False] * n
        self._parent = [-1] * n
        self._base = list(range(n))
        self._used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in iter_bits(self._adj[v]):
                if self._base[v] == self._base[to] or self.match[v] == to:
                    continue
                if to == root or (self.match[to] != -1 and self._parent[self.match[to]] != -1):
                    stem = self._lca(v, to)
                    self._blossom = [False] * n
                    self._mark_path(v, stem, to)
                    self._mark_path(to, stem, v)
                    for i in range(n):
                        if self._blossom[self._base[i]]:
                            self._base[i] = stem
                            if not self._used[i]:
                                self._used[i] = True
                                queue.append(i)
                elif self._parent[to] == -1:
                    self._parent[to] = v
                    if self.match[to] == -1:
                        return to
                    self._used[self.match[to]] = True
                    queue.append(self.match[to])
        return -1


def maximum_matching(graph: Graph) -> MatchingResult:
    match = _EdmondsMatcher(graph).run()
    edges = tuple(sorted((v, w) for v, w in enumerate(match) if w > v))
    mu = len(edges)
    logger.debug("Maximum matching of size %d on %d vertices", mu, graph.n)
    return MatchingResult(
        mu=mu,
        matching=edges,
        perfect=2 * mu == graph.n,
        pendant_perfect=pendant_perfect_matching(graph),
    )


def pendant_perfect_matching(graph: Graph) -> tuple[Edge, ...] | None:
    # Every pendant vertex forces its own edge, so the forced edges are the only candidate.
    covered = 0
    edges = pendant_data(graph).edges
    for u, v in edges:
        ends = bit(u) | bit(v)
        if covered & ends:
            return None
        covered |= ends
    return edges if covered == graph.full_mask else None


def matching_number_brute_force(graph: Graph) -> int:
    adj = graph.adj

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if popcount(mask) < 2:
            return 0
        v = lowest(mask)
        rest = mask & ~bit(v)
        result = best(rest)
        for w in iter_bits(adj[v] & rest):
            result = max(result, 1 + best(rest & ~bit(w)))
        return result

    return best(graph.full_mask)


def maximum_matchings(graph: Graph, *, cap: int | None = None) -> list[tuple[Edge, ...]]:
    """Every maximum matching of ``graph``, each as a sorted edge tuple."""
    limit = resolve_omega_cap(cap)
    mu = maximum_matching(graph).mu
    adj = graph.adj
    found: list[tuple[Edge, ...]] = []

    def extend(mask: int, chosen: tuple[Edge, ...]) -> Iterator[tuple[Edge, ...]]:
        if len(chosen) == mu:
            yield chosen
            return
        if len(chosen) + popcount(mask) // 2 < mu:
            return
        v = lowest(mask)
        rest = mask & ~bit(v)
        yield from extend(rest, chosen)
        for w in iter_bits(adj[v] & rest):
            yield from extend(rest & ~bit(w), chosen + (normalize_edge(v, w),))

    for matching in extend(graph.full_mask, ()):
        found.append(tuple(sorted(matching)))
        if len(found) > limit:
            raise BudgetExceededError(limit, "maximum matchings")
    found.sort()
    return found
