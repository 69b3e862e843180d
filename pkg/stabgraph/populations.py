from __future__ import annotations

import heapq
import logging
import random
from collections import deque
from itertools import permutations, product
from typing import Iterator

import networkx as nx

from stabgraph.bitset import bit, iter_bits
from stabgraph.constants import (
    CANONICAL_MAX_N,
    DEFAULT_RANDOM_MAX_N,
    DEFAULT_SEED,
    ENUMERATION_MAX_N,
    MAX_VERTICES,
    MIN_VERTICES,
)
from stabgraph.encoding import to_graph6
from stabgraph.graph import Graph, GraphError, from_networkx

logger = logging.getLogger(__name__)

LABELED_TREE_MAX_N = 9


def _pairs(n: int) -> list[tuple[int, int]]:
    # graph6 bit order
    return [(i, j) for j in range(1, n) for i in range(j)]


def _check_range(name: str, n: int, upper: int) -> None:
    if not MIN_VERTICES <= n <= upper:
        raise GraphError(f"{name} needs {MIN_VERTICES} <= n <= {upper}, got {n}")


def enumerate_graphs(n: int, *, canonical: bool = False) -> Iterator[Graph]:
    """Every labeled graph on n vertices, or one canonical graph per isomorphism class."""
    if canonical:
        _check_range("canonical enumeration", n, CANONICAL_MAX_N)
        yield from sorted(
            (canonical_form(from_networkx(g)) for g in nx.graph_atlas_g() if g.number_of_nodes() == n),
            key=to_graph6,
        )
        return
    _check_range("enumeration", n, ENUMERATION_MAX_N)
    pairs = _pairs(n)
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for index in iter_bits(code):
            i, j = pairs[index]
            adj[i] |= bit(j)
            adj[j] |= bit(i)
        yield Graph(n, tuple(adj))


def population(nmax: int, *, nmin: int = MIN_VERTICES, canonical: bool = False) -> Iterator[Graph]:
    for n in range(nmin, nmax + 1):
        yield from enumerate_graphs(n, canonical=canonical)


def population_size(nmax: int, *, nmin: int = MIN_VERTICES, canonical: bool = False) -> int:
    if canonical:
        return sum(
            1 for g in nx.graph_atlas_g() if nmin <= g.number_of_nodes() <= nmax
        )
    return sum(1 << (n * (n - 1) // 2) for n in range(nmin, nmax + 1))


def random_graphs(
    n: int | None,
    count: int,
    p: float = 0.5,
    seed: int = DEFAULT_SEED,
    *,
    max_n: int = DEFAULT_RANDOM_MAX_N,
) -> Iterator[Graph]:
    """Reproducible G(n, p) graphs; with n=None each order is drawn from 2..max_n."""
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"Edge probability must lie in [0, 1], got {p}")
    if n is not None:
        _check_range("random graphs", n, MAX_VERTICES)
    else:
        _check_range("random graphs", max_n, MAX_VERTICES)
    rng = random.Random(seed)
    for _ in range(count):
        size = n if n is not None else rng.randint(MIN_VERTICES, max_n)
        yield from_networkx(nx.gnp_random_graph(size, p, seed=rng.randrange(2**32)))


def prufer_decode(sequence: tuple[int, ...]) -> Graph:
    n = len(sequence) + 2
    degree = [1] * n
    for v in sequence:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def enumerate_trees(n: int, *, labeled: bool = True) -> Iterator[Graph]:
    """All n**(n-2) labeled trees by Prüfer decoding, or one per isomorphism class."""
    if labeled:
        _check_range("labeled tree enumeration", n, LABELED_TREE_MAX_N)
        for sequence in product(range(n), repeat=n - 2):
            yield prufer_decode(sequence)
        return
    _check_range("tree enumeration", n, MAX_VERTICES)
    if n == MIN_VERTICES:
        yield Graph.from_edges(2, [(0, 1)])
        return
    for tree in nx.nonisomorphic_trees(n):
        yield from_networkx(tree)


def _distance(adj: list[int], source: int, target: int, limit: int) -> int | None:
    """BFS distance from source to target, or None when it is at least ``limit``."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if dist[u] + 1 >= limit:
            continue
        for w in iter_bits(adj[u]):
            if w not in dist:
                dist[w] = dist[u] + 1
                if w == target:
                    return dist[w]
                queue.append(w)
    return None


def enumerate_min_girth(n: int, g: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices whose girth is at least g."""
    _check_range("girth enumeration", n, ENUMERATION_MAX_N)
    if g < 3:
        yield from enumerate_graphs(n)
        return
    pairs = _pairs(n)
    adj = [0] * n

    def extend(index: int) -> Iterator[Graph]:
        if index == len(pairs):
            yield Graph(n, tuple(adj))
            return
        yield from extend(index + 1)
        i, j = pairs[index]
        # adding ij closes a cycle of length dist(i, j) + 1
        if _distance(adj, i, j, g - 1) is None:
            adj[i] |= bit(j)
            adj[j] |= bit(i)
            yield from extend(index + 1)
            adj[i] &= ~bit(j)
            adj[j] &= ~bit(i)

    yield from extend(0)


def _relabel(graph: Graph, order: tuple[int, ...]) -> Graph:
    position = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(graph.n, ((position[u], position[v]) for u, v in graph.edges()))


def canonical_form(graph: Graph) -> Graph:
    """Smallest graph6 relabeling among orders sorted by an isomorphism invariant."""
    if graph.n > CANONICAL_MAX_N:
        raise GraphError(f"canonical_form is limited to {CANONICAL_MAX_N} vertices (got {graph.n})")
    keys = {
        v: (graph.degree(v), tuple(sorted(graph.degree(w) for w in iter_bits(graph.adj[v]))))
        for v in graph.vertices
    }
    cells: dict[tuple, list[int]] = {}
    for v in graph.vertices:
        cells.setdefault(keys[v], []).append(v)
    ordered = [cells[key] for key in sorted(cells)]

    best: Graph | None = None
    best_code = ""
    for choice in product(*(permutations(cell) for cell in ordered)):
        order = tuple(v for part in choice for v in part)
        candidate = _relabel(graph, order)
        code = to_graph6(candidate)
        if best is None or code < best_code:
            best, best_code = candidate, code
    assert best is not None
    return best
