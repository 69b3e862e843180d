from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable

import networkx as nx

from stabgraph.bitset import bit, full_mask, iter_bits, lowest, mask_of, members, popcount
from stabgraph.constants import HAMILTONIAN_PATH_MAX_N, MAX_VERTICES

Edge = tuple[int, int]

INFINITE = math.inf


class GraphError(ValueError):
    pass


def normalize_edge(u: int, v: int) -> Edge:
    if u == v:
        raise GraphError(f"Loop at vertex {u} is not allowed")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, slots=True)
class EdgePair:
    e1: Edge
    e2: Edge

    def __post_init__(self) -> None:
        e1 = normalize_edge(*self.e1)
        e2 = normalize_edge(*self.e2)
        if e1 == e2:
            raise GraphError(f"Edge pair repeats the edge {e1}")
        if e2 < e1:
            e1, e2 = e2, e1
        object.__setattr__(self, "e1", e1)
        object.__setattr__(self, "e2", e2)

    @property
    def edges(self) -> tuple[Edge, Edge]:
        return (self.e1, self.e2)

    def shares_endpoint(self) -> bool:
        return bool(set(self.e1) & set(self.e2))


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the bitmask of N(v). Instances are immutable; every edge
    operation returns a new graph.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "adj", tuple(self.adj))
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"Vertex count {self.n} is out of range (1..{MAX_VERTICES})")
        if len(self.adj) != self.n:
            raise GraphError(
                f"Adjacency has {len(self.adj)} rows for {self.n} vertices"
            )
        full = full_mask(self.n)
        for v, nbrs in enumerate(self.adj):
            if nbrs & ~full:
                raise GraphError(f"Vertex {v} has a neighbor outside 0..{self.n - 1}")
            if nbrs >> v & 1:
                raise GraphError(f"Loop at vertex {v} is not allowed")
            for w in iter_bits(nbrs):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"Adjacency is not symmetric for {v}-{w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"Vertex count {n} is out of range (1..{MAX_VERTICES})")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"Edge {u}-{v} has a vertex outside 0..{n - 1}")
            u, v = normalize_edge(u, v)
            if adj[u] >> v & 1:
                raise GraphError(f"Duplicate edge {u}-{v}")
            adj[u] |= bit(v)
            adj[v] |= bit(u)
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return full_mask(self.n)

    @property
    def edge_count(self) -> int:
        return sum(popcount(nbrs) for nbrs in self.adj) // 2

    @property
    def non_edge_count(self) -> int:
        return self.n * (self.n - 1) // 2 - self.edge_count

    def edges(self) -> tuple[Edge, ...]:
        result: list[Edge] = []
        for u, nbrs in enumerate(self.adj):
            for v in iter_bits(nbrs >> (u + 1)):
                result.append((u, u + 1 + v))
        return tuple(result)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.adj[v]))

    def neighborhood(self, mask: int) -> int:
        result = 0
        for v in iter_bits(mask):
            result |= self.adj[v]
        return result

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | bit(v)

    def is_stable(self, mask: int) -> bool:
        return all(not self.adj[v] & mask for v in iter_bits(mask))


@dataclass(frozen=True, slots=True)
class InducedSubgraph:
    graph: Graph
    vertices: tuple[int, ...]

    def original(self, v: int) -> int:
        return self.vertices[v]

    def lift(self, mask: int) -> int:
        return mask_of(self.vertices[v] for v in iter_bits(mask))


@dataclass(frozen=True, slots=True)
class PendantData:
    vertices: int
    edges: tuple[Edge, ...]


def complement_edges(graph: Graph) -> list[Edge]:
    result: list[Edge] = []
    for u in range(graph.n):
        missing = ~graph.adj[u] & graph.full_mask
        for v in iter_bits(missing >> (u + 1)):
            result.append((u, u + 1 + v))
    return result


def with_edges(graph: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    adj = list(graph.adj)
    for u, v in edges:
        if not (0 <= u < graph.n and 0 <= v < graph.n):
            raise GraphError(f"Edge {u}-{v} has a vertex outside 0..{graph.n - 1}")
        u, v = normalize_edge(u, v)
        if adj[u] >> v & 1:
            raise GraphError(f"{u}-{v} is already an edge")
        adj[u] |= bit(v)
        adj[v] |= bit(u)
    return Graph(graph.n, tuple(adj))


def add_edge(graph: Graph, edge: tuple[int, int]) -> Graph:
    return with_edges(graph, (edge,))


def add_edges(graph: Graph, pair: EdgePair) -> Graph:
    return with_edges(graph, pair.edges)


def induced_subgraph(graph: Graph, mask: int) -> InducedSubgraph:
    if mask == 0:
        raise GraphError("Induced subgraph of an empty vertex set")
    if mask & ~graph.full_mask:
        raise GraphError(f"Vertex set {mask:#x} has members outside 0..{graph.n - 1}")
    old = members(mask)
    index = {v: i for i, v in enumerate(old)}
    adj = tuple(mask_of(index[w] for w in iter_bits(graph.adj[v] & mask)) for v in old)
    return InducedSubgraph(Graph(len(old), adj), old)


def remove_vertices(graph: Graph, mask: int) -> InducedSubgraph:
    return induced_subgraph(graph, graph.full_mask & ~mask)


def girth(graph: Graph) -> int | float:
    best: int | float = INFINITE
    for root in range(graph.n):
        dist = [-1] * graph.n
        parent = [-1] * graph.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in iter_bits(graph.adj[u]):
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def find_c4(graph: Graph, *, induced: bool = False) -> tuple[int, int, int, int] | None:
    """Return a 4-cycle (u, b, w, d) in cyclic order, or None.

    By default chords are allowed: four vertices carrying the edges ub, bw,
    wd, du are enough. With ``induced=True`` the cycle must be chordless.
    """
    for u in range(graph.n):
        for w in range(u + 1, graph.n):
            if induced and graph.has_edge(u, w):
                continue
            common = graph.adj[u] & graph.adj[w]
            if popcount(common) < 2:
                continue
            if not induced:
                b = lowest(common)
                d = lowest(common & ~bit(b))
                return (u, b, w, d)
            for b in iter_bits(common):
                rest = common & ~graph.adj[b] & ~bit(b)
                if rest:
                    return (u, b, w, lowest(rest))
    return None


def has_c4(graph: Graph, *, induced: bool = False) -> bool:
    return find_c4(graph, induced=induced) is not None


def pendant_data(graph: Graph) -> PendantData:
    vertices = 0
    edges: set[Edge] = set()
    for v, nbrs in enumerate(graph.adj):
        if popcount(nbrs) == 1:
            vertices |= bit(v)
            edges.add(normalize_edge(v, lowest(nbrs)))
    return PendantData(vertices, tuple(sorted(edges)))


def has_hamiltonian_path(graph: Graph) -> bool:
    n = graph.n
    if n > HAMILTONIAN_PATH_MAX_N:
        raise GraphError(
            f"Hamiltonian path search is limited to {HAMILTONIAN_PATH_MAX_N} vertices (got {n})"
        )
    # ends[mask]: vertices at which some path covering exactly `mask` can end
    ends = [0] * (1 << n)
    for v in range(n):
        ends[bit(v)] = bit(v)
    for mask in range(1, 1 << n):
        for v in iter_bits(ends[mask]):
            for w in iter_bits(graph.adj[v] & ~mask):
                ends[mask | bit(w)] |= bit(w)
    return ends[full_mask(n)] != 0


def connected_components(graph: Graph) -> list[int]:
    components: list[int] = []
    remaining = graph.full_mask
    while remaining:
        component = bit(lowest(remaining))
        frontier = component
        while frontier:
            frontier = graph.neighborhood(frontier) & ~component
            component |= frontier
        components.append(component)
        remaining &= ~component
    return components


def is_connected(graph: Graph) -> bool:
    return len(connected_components(graph)) == 1


def is_bipartite(graph: Graph) -> bool:
    color = [-1] * graph.n
    for root in range(graph.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in iter_bits(graph.adj[u]):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def is_forest(graph: Graph) -> bool:
    return graph.edge_count == graph.n - len(connected_components(graph))


def is_tree(graph: Graph) -> bool:
    return graph.edge_count == graph.n - 1 and is_connected(graph)


def is_complete(graph: Graph) -> bool:
    return graph.non_edge_count == 0


def is_complete_minus_edge(graph: Graph) -> bool:
    return graph.non_edge_count == 1


def is_cycle(graph: Graph) -> bool:
    return graph.n >= 3 and all(popcount(nbrs) == 2 for nbrs in graph.adj) and is_connected(graph)


def isolated_vertices(graph: Graph) -> int:
    return mask_of(v for v, nbrs in enumerate(graph.adj) if not nbrs)


def to_networkx(graph: Graph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(graph.vertices)
    result.add_edges_from(graph.edges())
    return result


def from_networkx(nx_graph: nx.Graph) -> Graph:
    relabeled = nx.convert_node_labels_to_integers(nx_graph, ordering="sorted")
    return Graph.from_edges(relabeled.number_of_nodes(), relabeled.edges())


def is_isomorphic(first: Graph, second: Graph) -> bool:
    if first.n != second.n or first.edge_count != second.edge_count:
        return False
    if sorted(map(popcount, first.adj)) != sorted(map(popcount, second.adj)):
        return False
    return nx.is_isomorphic(to_networkx(first), to_networkx(second))
