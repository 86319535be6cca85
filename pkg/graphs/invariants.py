"""
Transmission and eccentricity profiles.

Both vectors come out of one level-by-level BFS per vertex: the transmission
of v is the sum of i * |L_i(v)| and the eccentricity is the index of the last
level, so no distance matrix is built.
"""

from __future__ import annotations

from typing import Any

from attrs import frozen

from graphs.codec import graph6_text
from graphs.errors import EmptyGraph
from graphs.graph import Graph, bfs_levels, iter_bits
from utils.logger import setup_logger

logger = setup_logger(__name__)


@frozen
class InvariantProfile:
    """
    Per-vertex transmissions and eccentricities with derived scalars.

    Attributes:
        n: Order of the graph
        tr: Transmission of every vertex
        ec: Eccentricity of every vertex
        wiener: Wiener index (half the transmission sum)
        c_w: Number of distinct transmissions
        c_ec: Number of distinct eccentricities
        diam: Diameter
        rad: Radius
        tr_set: Sorted distinct transmissions
        ec_set: Sorted distinct eccentricities
        center: Sorted vertices of minimum eccentricity
    """

    n: int
    tr: tuple[int, ...]
    ec: tuple[int, ...]
    wiener: int
    c_w: int
    c_ec: int
    diam: int
    rad: int
    tr_set: tuple[int, ...]
    ec_set: tuple[int, ...]
    center: tuple[int, ...]

    @classmethod
    def from_vectors(cls, tr: list[int], ec: list[int]) -> InvariantProfile:
        tr_set = tuple(sorted(set(tr)))
        ec_set = tuple(sorted(set(ec)))
        rad = ec_set[0]
        return cls(
            n=len(tr),
            tr=tuple(tr),
            ec=tuple(ec),
            wiener=sum(tr) // 2,
            c_w=len(tr_set),
            c_ec=len(ec_set),
            diam=ec_set[-1],
            rad=rad,
            tr_set=tr_set,
            ec_set=ec_set,
            center=tuple(v for v, e in enumerate(ec) if e == rad),
        )

    def to_record(self, graph: Graph) -> dict[str, Any]:
        """JSON-lines record for one graph."""
        return {
            "graph6": graph6_text(graph),
            "n": self.n,
            "tr_set": list(self.tr_set),
            "ec_set": list(self.ec_set),
            "c_w": self.c_w,
            "c_ec": self.c_ec,
            "diam": self.diam,
            "rad": self.rad,
            "wiener": self.wiener,
        }


def transmissions_and_eccentricities(graph: Graph) -> tuple[list[int], list[int]]:
    """
    Transmission and eccentricity vectors.

    Raises:
        EmptyGraph: If n == 0
        Disconnected: If the graph is disconnected
    """
    if graph.n == 0:
        raise EmptyGraph("Invariants are undefined for the empty graph")
    tr = []
    ec = []
    for v in range(graph.n):
        levels = bfs_levels(graph, 1 << v)
        tr.append(sum(i * level.bit_count() for i, level in enumerate(levels)))
        ec.append(len(levels) - 1)
    return tr, ec


def profile(graph: Graph) -> InvariantProfile:
    """
    Compute the full invariant profile of a connected graph.

    Args:
        graph: Connected graph with n >= 1

    Returns:
        InvariantProfile; for K1 both complexities are 1 and diam = rad = 0

    Raises:
        EmptyGraph: If n == 0
        Disconnected: If the graph is disconnected
    """
    tr, ec = transmissions_and_eccentricities(graph)
    return InvariantProfile.from_vectors(tr, ec)


def distance_levels(graph: Graph) -> list[frozenset[int]]:
    """
    Partition the vertices by distance from the center.

    Args:
        graph: Connected graph

    Returns:
        Levels L_0..L_k; L_0 is the center

    Raises:
        Disconnected: If the graph is disconnected
    """
    center = profile(graph).center
    sources = 0
    for v in center:
        sources |= 1 << v
    return [frozenset(iter_bits(level)) for level in bfs_levels(graph, sources)]


def eccentric_set(graph: Graph, w: int) -> frozenset[int]:
    """
    Vertices at distance exactly ec(w) from w.

    Raises:
        VertexOutOfRange: If w >= n
        Disconnected: If the graph is disconnected
    """
    graph.check_vertex(w)
    return frozenset(iter_bits(bfs_levels(graph, 1 << w)[-1]))
