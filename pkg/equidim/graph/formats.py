"""graph6 and edge-list codecs

graph6 encoding and decoding is delegated to networkx; this module adapts it to
the bitset Graph and maps codec failures onto GraphFormatError.
"""

import logging
from typing import Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from ..const import GRAPH6_MAX_ORDER
from ..errors import GraphError, GraphFormatError
from .common import Graph, build_graph


logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_networkx(h: nx.Graph, name: Optional[str] = None) -> Graph:
    """Relabel nodes to 0..n-1 in sorted order"""
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    edges = [(index[u], index[v]) for u, v in h.edges()]
    return build_graph(len(nodes), edges, name=name)


def parse_graph6(text: str, name: Optional[str] = None) -> Graph:
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER) :]
    if not line:
        raise GraphFormatError("Empty graph6 line")
    if any(not 63 <= ord(c) <= 126 for c in line):
        raise GraphFormatError(f"graph6 characters must lie in '?'..'~': {line!r}")
    try:
        h = nx.from_graph6_bytes(line.encode("ascii"))
    except (nx.NetworkXError, ValueError, IndexError) as e:
        raise GraphFormatError(f"Malformed graph6 {line!r}: {e}") from e
    if h.number_of_nodes() == 0:
        raise GraphFormatError(f"graph6 {line!r} encodes the empty graph")
    if h.number_of_nodes() > GRAPH6_MAX_ORDER:
        raise GraphFormatError(
            f"graph6 order {h.number_of_nodes()} exceeds the cap {GRAPH6_MAX_ORDER}"
        )
    return from_networkx(h, name=name)


def write_graph6(g: Graph) -> str:
    payload = nx.to_graph6_bytes(to_networkx(g), header=False)
    return payload.decode("ascii").rstrip("\n")


def read_graph6_stream(stream: Iterable[str]) -> Iterator[Graph]:
    """Graphs of a graph6 stream, one per non-blank line"""
    for lineno, line in enumerate(stream, start=1):
        line = line.strip()
        if not line or line == GRAPH6_HEADER:
            continue
        try:
            yield parse_graph6(line)
        except GraphFormatError as e:
            raise GraphFormatError(f"line {lineno}: {e}") from e


def _int_tokens(line: str, lineno: int) -> Tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}")


def parse_edge_list(text: str, name: Optional[str] = None) -> Graph:
    """Parse "u v" lines (0-based) with an optional leading "n m" header

    The first line is taken as a header iff exactly m edge lines follow and
    every endpoint is below n. Lines starting with '#' are comments.
    """
    rows: List[Tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(_int_tokens(line, lineno))
    if not rows:
        raise GraphFormatError("Edge list is empty")
    n: Optional[int] = None
    edges = rows
    head_n, head_m = rows[0]
    body = rows[1:]
    if head_m == len(body) and all(max(e) < head_n for e in body):
        n, edges = head_n, body
    if n is None:
        n = max(max(e) for e in edges) + 1
    if any(min(e) < 0 for e in edges):
        raise GraphFormatError("Negative vertex index in edge list")
    try:
        return build_graph(n, edges, name=name)
    except GraphError as e:
        raise GraphFormatError(str(e)) from e


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
