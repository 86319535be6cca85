"""
Immutable graph values and BFS-based distance primitives.

A graph of order n stores one Python int per vertex; bit u of row v is set
when uv is an edge. Breadth-first search runs level by level on these
bitsets, so distances from a source are never materialized unless asked.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

import numpy as np
from attrs import field, frozen

from config.settings import settings
from graphs.errors import (
    Disconnected,
    EmptyGraph,
    InvalidEdge,
    SelfLoop,
    TooLarge,
    TooSmall,
    VertexOutOfRange,
)
from utils.logger import setup_logger

logger = setup_logger(__name__)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def check_order(n: int) -> None:
    """
    Reject orders above the configured capacity.

    Raises:
        TooLarge: If n exceeds settings.MAX_ORDER
    """
    if n > settings.MAX_ORDER:
        raise TooLarge(f"Order {n} exceeds capacity {settings.MAX_ORDER}")


@frozen
class Graph:
    """
    Simple undirected graph with bitset adjacency rows.

    Attributes:
        n: Number of vertices
        adj: Row v holds the neighbours of v as a bitmask
        label: Optional provenance tag, ignored by equality and hashing
    """

    n: int
    adj: tuple[int, ...]
    label: Optional[str] = field(default=None, eq=False)

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], label: Optional[str] = None
    ) -> Graph:
        """
        Build a graph from an edge list.

        Args:
            n: Number of vertices
            edges: Unordered vertex pairs; duplicates collapse
            label: Optional provenance tag

        Returns:
            Graph with exactly the given edges

        Raises:
            InvalidEdge: If an endpoint is outside 0..n-1
            SelfLoop: If an edge joins a vertex to itself
        """
        if n < 0:
            raise InvalidEdge(f"Negative vertex count: {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidEdge(f"Edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise SelfLoop(f"Self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), label)

    @classmethod
    def from_rows(
        cls, rows: Iterable[int], label: Optional[str] = None, check: bool = True
    ) -> Graph:
        """
        Build a graph from adjacency bit rows.

        Args:
            rows: One bitmask per vertex
            label: Optional provenance tag
            check: Validate symmetry, width and loop-freeness

        Returns:
            Graph over the given rows

        Raises:
            SelfLoop: If a row has its own bit set
            InvalidEdge: If rows are asymmetric or too wide
        """
        adj = tuple(rows)
        n = len(adj)
        if check:
            full = (1 << n) - 1
            for v, row in enumerate(adj):
                if row >> v & 1:
                    raise SelfLoop(f"Self-loop at vertex {v}")
                if row & ~full:
                    raise InvalidEdge(f"Row {v} has bits beyond n={n}")
                for u in iter_bits(row):
                    if not adj[u] >> v & 1:
                        raise InvalidEdge(f"Asymmetric edge ({v}, {u})")
        return cls(n, adj, label)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def check_vertex(self, v: int) -> None:
        """Raise VertexOutOfRange unless 0 <= v < n."""
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"Vertex {v} out of range for n={self.n}")

    def neighbors(self, v: int) -> list[int]:
        self.check_vertex(v)
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, sorted lexicographically."""
        return [
            (u, v) for u, row in enumerate(self.adj) for v in iter_bits(row >> (u + 1) << (u + 1))
        ]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def relabel(self, perm: list[int]) -> Graph:
        """
        Apply a vertex permutation.

        Args:
            perm: perm[old] is the new index of vertex old

        Returns:
            Isomorphic graph with relabelled vertices
        """
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            new_row = 0
            for u in iter_bits(row):
                new_row |= 1 << perm[u]
            rows[perm[v]] = new_row
        return Graph(self.n, tuple(rows), self.label)

    def with_label(self, label: Optional[str]) -> Graph:
        return Graph(self.n, self.adj, label)


@frozen(eq=False)
class DistanceMatrix:
    """
    All-pairs hop distances of a connected graph.

    Attributes:
        n: Number of vertices
        d: Read-only n x n int16 array
    """

    n: int
    d: np.ndarray

    def row(self, v: int) -> list[int]:
        return [int(x) for x in self.d[v]]

    def check(self, graph: Optional[Graph] = None) -> bool:
        """
        Verify the metric invariants.

        Args:
            graph: When given, also require d == 1 exactly on edges

        Returns:
            True if zero diagonal, symmetry, positivity and the triangle inequality hold
        """
        d = self.d.astype(np.int32)
        off_diagonal = ~np.eye(self.n, dtype=bool)
        if np.any(np.diag(d) != 0) or not np.array_equal(d, d.T):
            return False
        if np.any(d[off_diagonal] < 1):
            return False
        for v in range(self.n):
            if np.any(d > d[:, v][:, None] + d[v, :][None, :]):
                return False
        if graph is not None:
            adjacency = np.array(
                [[row >> u & 1 for u in range(self.n)] for row in graph.adj], dtype=bool
            )
            if not np.array_equal(d == 1, adjacency):
                return False
        return True


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list (see Graph.from_edges)."""
    return Graph.from_edges(n, edges)


def degree(graph: Graph, v: int) -> int:
    """
    Degree of a vertex.

    Raises:
        VertexOutOfRange: If v >= n
    """
    return graph.degree(v)


def reachable(adj: tuple[int, ...] | list[int], start: int, allowed: int) -> int:
    """
    Bitset of vertices reachable from `start` inside the `allowed` vertex mask.

    Args:
        adj: Adjacency rows
        start: Source mask (must be a subset of allowed)
        allowed: Vertices the search may enter
    """
    seen = frontier = start
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(graph: Graph) -> bool:
    """
    Check connectivity by a bitset BFS from vertex 0.

    Raises:
        EmptyGraph: If n == 0
    """
    if graph.n == 0:
        raise EmptyGraph("Connectivity is undefined for the empty graph")
    return reachable(graph.adj, 1, graph.full_mask) == graph.full_mask


def bfs_levels(graph: Graph, sources: int) -> list[int]:
    """
    Breadth-first levels from a set of sources.

    Args:
        graph: Connected graph
        sources: Nonempty bitmask of source vertices

    Returns:
        Level masks; level i holds the vertices at distance i from the sources

    Raises:
        Disconnected: If some vertex is unreachable
    """
    adj = graph.adj
    seen = frontier = sources
    levels = [sources]
    while True:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        if not frontier:
            break
        seen |= frontier
        levels.append(frontier)
    if seen != graph.full_mask:
        raise Disconnected(f"Graph of order {graph.n} is disconnected")
    return levels


def bfs_distances(graph: Graph, src: int) -> list[int]:
    """
    Hop distances from one source vertex.

    Raises:
        VertexOutOfRange: If src >= n
        Disconnected: If the graph is disconnected
    """
    graph.check_vertex(src)
    distances = [0] * graph.n
    for level, mask in enumerate(bfs_levels(graph, 1 << src)):
        for v in iter_bits(mask):
            distances[v] = level
    return distances


def all_pairs_distances(graph: Graph) -> DistanceMatrix:
    """
    All-pairs hop distances from n breadth-first searches.

    Raises:
        EmptyGraph: If n == 0
        Disconnected: If the graph is disconnected
    """
    if graph.n == 0:
        raise EmptyGraph("Distances are undefined for the empty graph")
    d = np.zeros((graph.n, graph.n), dtype=np.int16)
    for src in range(graph.n):
        for level, mask in enumerate(bfs_levels(graph, 1 << src)):
            if level:
                d[src, list(iter_bits(mask))] = level
    d.setflags(write=False)
    return DistanceMatrix(graph.n, d)


def is_biconnected(graph: Graph) -> bool:
    """
    Check for articulation vertices with an iterative low-point DFS.

    Raises:
        TooSmall: If n < 3
        Disconnected: If the graph is disconnected
    """
    n = graph.n
    if n < 3:
        raise TooSmall(f"Biconnectivity needs n >= 3, got n={n}")
    if not is_connected(graph):
        raise Disconnected(f"Graph of order {n} is disconnected")

    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    disc[0] = 0
    clock = 1
    root_children = 0
    stack = [(0, iter_bits(graph.adj[0]))]
    while stack:
        v, pending = stack[-1]
        for w in pending:
            if disc[w] == -1:
                parent[w] = v
                disc[w] = low[w] = clock
                clock += 1
                stack.append((w, iter_bits(graph.adj[w])))
                break
            if w != parent[v]:
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            if not stack:
                break
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if parent[p] == -1:
                root_children += 1
            elif low[v] >= disc[p]:
                return False
    return root_children < 2


def is_cut_vertex(adj: tuple[int, ...] | list[int], n: int, v: int) -> bool:
    """True if deleting v from the connected graph on rows `adj` disconnects it."""
    if n <= 2:
        return False
    rest = ((1 << n) - 1) & ~(1 << v)
    start = rest & -rest
    return reachable(adj, start, rest) != rest


def is_tree(graph: Graph) -> bool:
    """True iff the graph is connected with exactly n - 1 edges."""
    if graph.n == 0:
        return False
    return graph.edge_count() == graph.n - 1 and is_connected(graph)
