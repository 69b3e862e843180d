from __future__ import annotations

import networkx as nx

from stabgraph.bitset import bit
from stabgraph.constants import MAX_VERTICES, MIN_VERTICES
from stabgraph.graph import Graph, GraphError, from_networkx, isolated_vertices, to_networkx

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_OFFSET = 63
GRAPH6_LONG_PREFIX = 126
GRAPH6_SHORT_MAX = 62


class GraphFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _check_order(n: int, line: int | None) -> None:
    if not MIN_VERTICES <= n <= MAX_VERTICES:
        raise GraphFormatError(
            f"Vertex count {n} is out of range ({MIN_VERTICES}..{MAX_VERTICES})", line
        )


def _graph6_bytes(text: bytes | str) -> bytes:
    if isinstance(text, str):
        try:
            return text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise GraphFormatError("graph6 text must be ASCII") from exc
    return bytes(text)


def parse_graph6(text: bytes | str, *, line: int | None = None) -> Graph:
    data = _graph6_bytes(text).rstrip(b"\r\n")
    if data.startswith(GRAPH6_HEADER.encode("ascii")):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise GraphFormatError("Empty graph6 string", line)
    for ch in data:
        if not GRAPH6_OFFSET <= ch <= GRAPH6_LONG_PREFIX:
            raise GraphFormatError(f"Invalid graph6 character {chr(ch)!r}", line)

    if data[0] != GRAPH6_LONG_PREFIX:
        n, body = data[0] - GRAPH6_OFFSET, data[1:]
    else:
        if len(data) < 4 or data[1] == GRAPH6_LONG_PREFIX:
            raise GraphFormatError("Malformed graph6 length prefix", line)
        n = 0
        for ch in data[1:4]:
            n = (n << 6) | (ch - GRAPH6_OFFSET)
        if n <= GRAPH6_SHORT_MAX:
            raise GraphFormatError("Malformed graph6 length prefix", line)
        body = data[4:]
    _check_order(n, line)

    bit_count = n * (n - 1) // 2
    expected = (bit_count + 5) // 6
    if len(body) != expected:
        raise GraphFormatError(
            f"graph6 body has {len(body)} bytes, expected {expected} for n={n}", line
        )
    padding = expected * 6 - bit_count
    if padding and (body[-1] - GRAPH6_OFFSET) & ((1 << padding) - 1):
        raise GraphFormatError("graph6 padding bits are not zero", line)

    try:
        decoded = nx.from_graph6_bytes(data)
    except nx.NetworkXError as exc:
        raise GraphFormatError(str(exc), line) from exc
    return from_networkx(decoded)


def to_graph6(graph: Graph, *, header: bool = False) -> str:
    encoded = nx.to_graph6_bytes(to_networkx(graph), header=header)
    return encoded.decode("ascii").rstrip("\n")


def parse_graph6_lines(text: bytes | str) -> list[Graph]:
    data = _graph6_bytes(text)
    graphs = []
    for number, raw in enumerate(data.splitlines(), start=1):
        if raw.strip():
            graphs.append(parse_graph6(raw, line=number))
    return graphs


def _parse_ints(tokens: list[str], line: int) -> list[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError as exc:
        raise GraphFormatError(f"Expected integers, got {' '.join(tokens)!r}", line) from exc


def _parse_edge_block(lines: list[tuple[int, str]], start: int) -> tuple[Graph, int]:
    header_line, header = lines[start]
    fields = header.split()
    if len(fields) != 2:
        raise GraphFormatError("Expected header 'n m'", header_line)
    n, m = _parse_ints(fields, header_line)
    _check_order(n, header_line)
    if m < 0:
        raise GraphFormatError(f"Negative edge count {m}", header_line)
    if start + 1 + m > len(lines):
        raise GraphFormatError(
            f"Expected {m} edge lines, found {len(lines) - start - 1}", header_line
        )

    adj = [0] * n
    for line_no, text in lines[start + 1:start + 1 + m]:
        fields = text.split()
        if len(fields) != 2:
            raise GraphFormatError("Expected edge line 'u v'", line_no)
        u, v = _parse_ints(fields, line_no)
        if u == v:
            raise GraphFormatError(f"Loop at vertex {u}", line_no)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"Vertex out of range in edge {u} {v} (n={n})", line_no)
        if adj[u] >> v & 1:
            raise GraphFormatError(f"Duplicate edge {min(u, v)} {max(u, v)}", line_no)
        adj[u] |= bit(v)
        adj[v] |= bit(u)
    try:
        graph = Graph(n, tuple(adj))
    except GraphError as exc:
        raise GraphFormatError(str(exc), header_line) from exc
    return graph, start + 1 + m


def _content_lines(text: str) -> list[tuple[int, str]]:
    result = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            result.append((number, stripped))
    return result


def parse_edge_list(text: str) -> Graph:
    """Parse one graph written as a header line ``n m`` followed by ``m`` lines ``u v``.

    Blank lines and ``#`` comments are ignored. Trailing content after the
    ``m`` edge lines is an error; use :func:`parse_edge_lists` for streams.
    """
    lines = _content_lines(text)
    if not lines:
        raise GraphFormatError("Empty edge list")
    graph, end = _parse_edge_block(lines, 0)
    if end != len(lines):
        raise GraphFormatError("Unexpected content after the last edge", lines[end][0])
    return graph


def parse_edge_lists(text: str) -> list[Graph]:
    lines = _content_lines(text)
    graphs = []
    position = 0
    while position < len(lines):
        graph, position = _parse_edge_block(lines, position)
        graphs.append(graph)
    return graphs


def to_edge_list(graph: Graph) -> str:
    edges = graph.edges()
    rows = [f"{graph.n} {len(edges)}"]
    rows.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(rows) + "\n"


def to_dot(graph: Graph, *, name: str | None = None) -> str:
    rows = [f"graph {name} {{" if name else "graph {"]
    isolated = isolated_vertices(graph)
    rows.extend(f"  {v};" for v in graph.vertices if isolated >> v & 1)
    rows.extend(f"  {u} -- {v};" for u, v in graph.edges())
    rows.append("}")
    return "\n".join(rows) + "\n"
