from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from stabgraph.constants import MAX_VERTICES, MIN_VERTICES
from stabgraph.graph import Graph, GraphError


@dataclass(frozen=True, slots=True)
class Fixture:
    labels: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    dotted: tuple[tuple[str, str], ...] = ()

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise GraphError(f"Unknown vertex label {label!r}") from None

    def graph(self, *, dotted: bool = False) -> Graph:
        edges = self.edges + self.dotted if dotted else self.edges
        return Graph.from_edges(
            len(self.labels), ((self.index(u), self.index(v)) for u, v in edges)
        )


FIXTURES: dict[str, Fixture] = {
    "K3_PLUS_E": Fixture(
        labels=("x", "y", "z", "p"),
        edges=(
            ("x", "y"),  # triangle
            ("x", "z"),  # triangle
            ("y", "z"),  # triangle
            ("p", "x"),  # pendant at x
        ),
    ),
    "K4_PLUS_E": Fixture(
        labels=("u1", "u2", "u3", "u4", "p"),
        edges=(
            ("u1", "u2"),  # K4
            ("u1", "u3"),  # K4
            ("u1", "u4"),  # K4
            ("u2", "u3"),  # K4
            ("u2", "u4"),  # K4
            ("u3", "u4"),  # K4
            ("p", "u1"),  # pendant at u1
        ),
    ),
    "G1": Fixture(
        labels=("a", "b", "c", "d", "b2", "b3", "t2", "t3"),
        edges=(
            ("a", "b2"),  # bottom path
            ("b2", "b3"),  # bottom path
            ("b3", "c"),  # bottom path
            ("b", "t2"),  # top path
            ("t2", "t3"),  # top path
            ("t3", "d"),  # top path
            ("b2", "t2"),  # left vertical
            ("b3", "t3"),  # right vertical
            ("b2", "t3"),  # diagonal
        ),
    ),
    "G2": Fixture(
        labels=("p1", "p2", "p3", "p4", "q2", "q3"),
        edges=(
            ("p1", "p2"),  # path
            ("p2", "p3"),  # path
            ("p3", "p4"),  # path
            ("q2", "q3"),  # pendant at q2
            ("p2", "q2"),  # triangle side
            ("q2", "p3"),  # triangle side
        ),
    ),
    # FIG2_*: the three four-vertex and six-vertex configurations with a
    # perfect matching a_s b_s; ``dotted`` adds the edge pair whose
    # insertion lowers alpha.
    "FIG2_A": Fixture(
        labels=("a_i", "a_k", "b_i", "b_k"),
        edges=(
            ("a_i", "b_i"),  # matching
            ("b_i", "b_k"),  # solid
            ("b_i", "a_k"),  # solid
            ("b_k", "a_k"),  # matching
        ),
        dotted=(
            ("a_i", "a_k"),  # dotted
            ("a_i", "b_k"),  # dotted
        ),
    ),
    "FIG2_B": Fixture(
        labels=("a_i", "a_k", "b_i", "b_k"),
        edges=(
            ("a_i", "b_i"),  # matching
            ("b_i", "a_k"),  # solid
            ("a_i", "b_k"),  # solid
            ("b_k", "a_k"),  # matching
        ),
        dotted=(
            ("b_i", "b_k"),  # dotted
            ("a_i", "a_k"),  # dotted
        ),
    ),
    "FIG2_C": Fixture(
        labels=("a_i", "a_k", "a_j", "b_i", "b_k", "b_j"),
        edges=(
            ("a_i", "b_i"),  # matching
            ("a_k", "b_k"),  # matching
            ("a_j", "b_j"),  # matching
            ("b_i", "a_k"),  # solid
            ("b_k", "a_j"),  # solid
        ),
        dotted=(
            ("a_i", "a_k"),  # dotted
            ("b_k", "b_j"),  # dotted
        ),
    ),
}


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise GraphError(message)


def complete(n: int) -> Graph:
    _require(MIN_VERTICES <= n <= MAX_VERTICES, f"complete(n) needs 2 <= n <= 64, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_minus_edge(n: int) -> Graph:
    _require(
        MIN_VERTICES <= n <= MAX_VERTICES, f"complete_minus_edge(n) needs 2 <= n <= 64, got {n}"
    )
    return Graph.from_edges(n, (e for e in combinations(range(n), 2) if e != (0, 1)))


def cycle(n: int) -> Graph:
    _require(3 <= n <= MAX_VERTICES, f"cycle(n) needs 3 <= n <= 64, got {n}")
    return Graph.from_edges(n, ((v, (v + 1) % n) for v in range(n)))


def path(n: int) -> Graph:
    _require(MIN_VERTICES <= n <= MAX_VERTICES, f"path(n) needs 2 <= n <= 64, got {n}")
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def edgeless(n: int) -> Graph:
    _require(MIN_VERTICES <= n <= MAX_VERTICES, f"edgeless(n) needs 2 <= n <= 64, got {n}")
    return Graph.empty(n)


def star(k: int) -> Graph:
    """K_{1,k} with center 0."""
    _require(1 <= k < MAX_VERTICES, f"star(k) needs 1 <= k <= 63, got {k}")
    return Graph.from_edges(k + 1, ((0, leaf) for leaf in range(1, k + 1)))


def p3_substitution(m: int) -> Graph:
    """P3 with K1, K_m and K2 substituted for its vertices.

    Vertex 0 is the K1, vertices 1..m form the clique B and m+1, m+2 the
    clique {c1, c2}. Every vertex of B sees every other vertex.
    """
    _require(1 <= m <= MAX_VERTICES - 3, f"p3_substitution(m) needs 1 <= m <= 61, got {m}")
    clique = range(1, m + 1)
    c1, c2 = m + 1, m + 2
    edges = list(combinations(clique, 2))
    edges.append((c1, c2))
    for b in clique:
        edges.extend(((0, b), (b, c1), (b, c2)))
    return Graph.from_edges(m + 3, edges)


def corona(graph: Graph) -> Graph:
    """Attach one pendant vertex v + n to every vertex v."""
    _require(2 * graph.n <= MAX_VERTICES, f"corona needs n <= 32, got {graph.n}")
    edges = list(graph.edges())
    edges.extend((v, v + graph.n) for v in graph.vertices)
    return Graph.from_edges(2 * graph.n, edges)


def disjoint_union(first: Graph, second: Graph) -> Graph:
    n = first.n + second.n
    _require(n <= MAX_VERTICES, f"disjoint union has {n} vertices (max 64)")
    edges = list(first.edges())
    edges.extend((u + first.n, v + first.n) for u, v in second.edges())
    return Graph.from_edges(n, edges)


def vertex_labels(name: str) -> tuple[str, ...]:
    return _fixture(name).labels


def vertex_index(name: str, label: str) -> int:
    return _fixture(name).index(label)


def _fixture(name: str) -> Fixture:
    fixture = FIXTURES.get(name.upper())
    if fixture is None:
        raise GraphError(f"Unknown fixture {name!r}")
    return fixture


CONSTRUCTORS: dict[str, Callable[[int], Graph]] = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "complete_minus_edge": complete_minus_edge,
    "p3_substitution": p3_substitution,
    "edgeless": edgeless,
    "star": star,
}


def make_named(name: str, param: int | None = None, *, dotted: bool = False) -> Graph:
    constructor = CONSTRUCTORS.get(name.lower())
    if constructor is not None:
        if param is None:
            raise GraphError(f"{name} needs an integer parameter")
        return constructor(param)
    fixture = _fixture(name)
    if param is not None:
        raise GraphError(f"Fixture {name} takes no parameter")
    if dotted and not fixture.dotted:
        raise GraphError(f"Fixture {name} has no dotted variant")
    return fixture.graph(dotted=dotted)


def named_catalogue() -> list[str]:
    return sorted(CONSTRUCTORS) + sorted(FIXTURES)
