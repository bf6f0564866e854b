"""Key abstractions of the graph core

Vertices are labelled 0..n-1 and every vertex set is an int bitset, so the
same code serves single-word (n <= 64) and multi-word orders.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from ..errors import DisconnectedGraphError, GraphError, VertexSetError


logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def full_mask(n: int) -> int:
    return (1 << n) - 1


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order"""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def lowest_bit(bits: int) -> int:
    return (bits & -bits).bit_length() - 1


def bits_of(members: Iterable[int]) -> int:
    bits = 0
    for v in members:
        bits |= 1 << v
    return bits


@dataclass(frozen=True)
class VertexSet:
    """Subset of the vertices of a graph of order n"""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.n:
            raise VertexSetError(
                f"Vertex set {bin(self.bits)} does not fit a graph of order {self.n}"
            )

    @staticmethod
    def of(members: Iterable[int], n: int) -> "VertexSet":
        members = list(members)
        for v in members:
            if not 0 <= v < n:
                raise VertexSetError(f"Vertex {v} out of range for order {n}")
        return VertexSet(bits_of(members), n)

    @staticmethod
    def from_labels(labels: Iterable[int], n: int) -> "VertexSet":
        """Build from 1-based labels"""
        labels = list(labels)
        for label in labels:
            if not 1 <= label <= n:
                raise VertexSetError(f"Label {label} out of range 1..{n}")
        return VertexSet(bits_of(label - 1 for label in labels), n)

    @staticmethod
    def empty(n: int) -> "VertexSet":
        return VertexSet(0, n)

    @staticmethod
    def full(n: int) -> "VertexSet":
        return VertexSet(full_mask(n), n)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.bits >> v & 1)

    def members(self) -> Tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    def labels(self) -> Tuple[int, ...]:
        return tuple(v + 1 for v in iter_bits(self.bits))

    def _check_same_order(self, other: "VertexSet") -> None:
        if other.n != self.n:
            raise VertexSetError(
                f"Vertex sets index different orders: {self.n} and {other.n}"
            )

    def union(self, other: "VertexSet") -> "VertexSet":
        self._check_same_order(other)
        return VertexSet(self.bits | other.bits, self.n)

    def difference(self, other: "VertexSet") -> "VertexSet":
        self._check_same_order(other)
        return VertexSet(self.bits & ~other.bits, self.n)

    def complement(self) -> "VertexSet":
        return VertexSet(full_mask(self.n) & ~self.bits, self.n)

    def issubset(self, other: "VertexSet") -> bool:
        self._check_same_order(other)
        return self.bits & ~other.bits == 0

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Order by size, then lexicographically by sorted members"""
        return len(self), self.members()

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self.labels()) + "}"


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with bitset adjacency"""

    n: int
    adj: Tuple[int, ...]
    name: Optional[str] = None
    vertex_names: Optional[Tuple[str, ...]] = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError(f"Graph order must be at least 1, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError(f"Expected {self.n} adjacency rows, got {len(self.adj)}")
        if self.vertex_names is not None and len(self.vertex_names) != self.n:
            raise GraphError("vertex_names must name every vertex")
        full = full_mask(self.n)
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"Vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"Loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"Adjacency is not symmetric at edge {v}-{u}")

    @property
    def all_bits(self) -> int:
        return full_mask(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.adj[v], self.n)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.adj]

    @cached_property
    def max_degree(self) -> int:
        return max(self.degrees())

    @cached_property
    def min_degree(self) -> int:
        return min(self.degrees())

    @cached_property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> Iterator[Pair]:
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def leaves(self) -> VertexSet:
        leaves = bits_of(v for v in range(self.n) if self.degree(v) == 1)
        return VertexSet(leaves, self.n)

    def support_vertices(self) -> VertexSet:
        """Vertices adjacent to at least one leaf"""
        bits = 0
        for leaf in self.leaves():
            bits |= self.adj[leaf]
        return VertexSet(bits, self.n)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self)

    @cached_property
    def distances(self) -> "DistanceMatrix":
        return all_pairs_distances(self)

    def bipartition(self) -> Optional[Tuple[VertexSet, VertexSet]]:
        """Partite sets of a connected bipartite graph, the one holding 0 first"""
        colour = [-1] * self.n
        colour[0] = 0
        frontier = [0]
        while frontier:
            nxt = []
            for v in frontier:
                for u in iter_bits(self.adj[v]):
                    if colour[u] < 0:
                        colour[u] = 1 - colour[v]
                        nxt.append(u)
                    elif colour[u] == colour[v]:
                        return None
            frontier = nxt
        if -1 in colour:
            return None
        side = bits_of(v for v in range(self.n) if colour[v] == 0)
        return VertexSet(side, self.n), VertexSet(self.all_bits & ~side, self.n)

    def is_tree(self) -> bool:
        return self.connected and self.edge_count == self.n - 1

    def vertex_name(self, v: int) -> str:
        if self.vertex_names is not None:
            return self.vertex_names[v]
        return str(v + 1)

    def with_name(self, name: Optional[str]) -> "Graph":
        return Graph(self.n, self.adj, name=name, vertex_names=self.vertex_names)

    def __str__(self) -> str:
        return self.name or f"graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class DistanceMatrix:
    """Hop distances of a connected graph

    levels[w][t] is the bitset of vertices at distance t from w.
    """

    n: int
    d: Tuple[Tuple[int, ...], ...]
    levels: Tuple[Tuple[int, ...], ...]

    @cached_property
    def diameter(self) -> int:
        return max(len(rows) - 1 for rows in self.levels)

    def eccentricity(self, v: int) -> int:
        return len(self.levels[v]) - 1

    def __getitem__(self, u: int) -> Tuple[int, ...]:
        return self.d[u]


def build_graph(
    n: int,
    edges: Iterable[Sequence[int]],
    name: Optional[str] = None,
    vertex_names: Optional[Sequence[str]] = None,
) -> Graph:
    """Build a simple graph, collapsing duplicate edges"""
    if n < 1:
        raise GraphError(f"Graph order must be at least 1, got {n}")
    adj = [0] * n
    for edge in edges:
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"Loop edge at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    names = tuple(vertex_names) if vertex_names is not None else None
    return Graph(n, tuple(adj), name=name, vertex_names=names)


def _bfs_levels(adj: Sequence[int], source: int) -> List[int]:
    levels = [1 << source]
    seen = 1 << source
    frontier = 1 << source
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= adj[v]
        frontier = reach & ~seen
        if frontier:
            seen |= frontier
            levels.append(frontier)
    return levels


def is_connected(g: Graph) -> bool:
    """BFS reachability from vertex 0"""
    reached = 0
    for level in _bfs_levels(g.adj, 0):
        reached |= level
    return reached == g.all_bits


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Exact hop distances by a frontier-bitset BFS from every vertex"""
    rows = []
    level_rows = []
    for source in range(g.n):
        levels = _bfs_levels(g.adj, source)
        row = [-1] * g.n
        for t, level in enumerate(levels):
            for v in iter_bits(level):
                row[v] = t
        if -1 in row:
            raise DisconnectedGraphError(f"{g} is disconnected")
        rows.append(tuple(row))
        level_rows.append(tuple(levels))
    return DistanceMatrix(n=g.n, d=tuple(rows), levels=tuple(level_rows))


def require_connected(g: Graph) -> None:
    if not g.connected:
        raise DisconnectedGraphError(f"{g} is disconnected")


def complement(g: Graph) -> Graph:
    full = g.all_bits
    adj = tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj))
    name = f"complement({g.name})" if g.name else None
    return Graph(g.n, adj, name=name, vertex_names=g.vertex_names)
