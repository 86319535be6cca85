"""
Canonical labeling by partition refinement and backtracking.

The search tree is built from an equitable refinement of the unit partition.
A node individualizes one vertex of the first smallest non-singleton cell and
refines again; leaves are discrete partitions. The canonical labeling is the
leaf with the smallest certificate (its relabelled adjacency rows).

Two kinds of pruning keep symmetric graphs cheap:

- a leaf whose certificate equals the first or the best leaf yields an
  automorphism; siblings in the same orbit under the automorphisms that fix
  the current path pointwise are skipped
- when that automorphism maps the earlier leaf's branch onto the current one,
  the whole current branch is abandoned
"""

from __future__ import annotations

from typing import Optional

from attrs import frozen

from config.settings import settings
from graphs.codec import encode_graph6
from graphs.errors import TooLarge
from graphs.graph import Graph, iter_bits
from utils.logger import setup_logger

logger = setup_logger(__name__)


@frozen
class CanonicalLabeling:
    """
    Attributes:
        form: graph6 encoding of the canonically relabelled graph
        order: order[i] is the original vertex placed at canonical position i
        generators: Automorphisms discovered during the search (perm[v] = image)
    """

    form: bytes
    order: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]

    @property
    def position(self) -> list[int]:
        """position[v] is the canonical index of original vertex v."""
        lab = [0] * len(self.order)
        for i, v in enumerate(self.order):
            lab[v] = i
        return lab


def _mask(cell: list[int]) -> int:
    out = 0
    for v in cell:
        out |= 1 << v
    return out


def _refine(adj: tuple[int, ...], cells: list[list[int]], queue: list[int]) -> list[list[int]]:
    """Split cells by neighbour counts into each splitter until equitable."""
    n = len(adj)
    while queue and len(cells) < n:
        splitter = queue.pop(0)
        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((adj[v] & splitter).bit_count(), []).append(v)
            if len(groups) == 1:
                refined.append(cell)
                continue
            for count in sorted(groups):
                fragment = groups[count]
                refined.append(fragment)
                queue.append(_mask(fragment))
        cells = refined
    return cells


def _orbits(n: int, generators: list[tuple[int, ...]]) -> list[int]:
    """Union-find roots of the orbit partition generated by `generators`."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in generators:
        for v, image in enumerate(gamma):
            a, b = find(v), find(image)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


class _Search:
    """One canonical-labeling run over a fixed graph."""

    def __init__(self, adj: tuple[int, ...]) -> None:
        self.adj = adj
        self.n = len(adj)
        self.first: Optional[tuple[tuple[int, ...], list[int], list[int]]] = None
        self.best: Optional[tuple[tuple[int, ...], list[int], list[int]]] = None
        self.generators: list[tuple[int, ...]] = []
        self.leaves = 0

    def _leaf(self, cells: list[list[int]], path: list[int]) -> int:
        self.leaves += 1
        order = [cell[0] for cell in cells]
        lab = [0] * self.n
        for i, v in enumerate(order):
            lab[v] = i
        cert = []
        for v in order:
            row = 0
            for u in iter_bits(self.adj[v]):
                row |= 1 << lab[u]
            cert.append(row)
        certificate = tuple(cert)

        if self.first is None:
            self.first = self.best = (certificate, order, path)
            return len(path)
        for reference in (self.first, self.best):
            if certificate == reference[0]:
                return self._automorphism(reference, order, path)
        if certificate < self.best[0]:
            self.best = (certificate, order, path)
        return len(path)

    def _automorphism(self, reference, order: list[int], path: list[int]) -> int:
        gamma = [0] * self.n
        for a, b in zip(reference[1], order):
            gamma[a] = b
        self.generators.append(tuple(gamma))

        ref_path = reference[2]
        d = 0
        while d < len(path) and d < len(ref_path) and path[d] == ref_path[d]:
            d += 1
        if (
            d < len(path)
            and d < len(ref_path)
            and all(gamma[x] == x for x in path[:d])
            and gamma[ref_path[d]] == path[d]
        ):
            return d
        return len(path)

    def visit(self, cells: list[list[int]], path: list[int]) -> int:
        """
        Explore the subtree below a node.

        Returns:
            The depth the search should resume at; len(path) means carry on
        """
        if len(cells) == self.n:
            return self._leaf(cells, path)

        index = min(
            (i for i, cell in enumerate(cells) if len(cell) > 1),
            key=lambda i: (len(cells[i]), i),
        )
        target = cells[index]
        explored: list[int] = []
        for v in sorted(target):
            if explored:
                fixing = [
                    gamma for gamma in self.generators
                    if all(gamma[x] == x for x in path)
                ]
                if fixing:
                    roots = _orbits(self.n, fixing)
                    if any(roots[v] == roots[u] for u in explored):
                        continue
            explored.append(v)
            rest = [u for u in target if u != v]
            child = cells[:index] + [[v], rest] + cells[index + 1:]
            child = _refine(self.adj, child, [1 << v])
            jump = self.visit(child, path + [v])
            if jump < len(path):
                return jump
        return len(path)


def canonical_labeling(graph: Graph) -> CanonicalLabeling:
    """
    Canonical labeling of a graph.

    Args:
        graph: Graph with n <= settings.CANONICAL_MAX_ORDER

    Returns:
        CanonicalLabeling whose form is identical exactly for isomorphic graphs

    Raises:
        TooLarge: If n exceeds the exact canonicalizer limit
    """
    n = graph.n
    if n > settings.CANONICAL_MAX_ORDER:
        raise TooLarge(
            f"Canonical labeling supports n <= {settings.CANONICAL_MAX_ORDER}, got {n}"
        )
    if n == 0:
        return CanonicalLabeling(encode_graph6(graph), (), ())

    search = _Search(graph.adj)
    cells = _refine(graph.adj, [list(range(n))], [graph.full_mask])
    search.visit(cells, [])
    certificate, order, _ = search.best
    form = encode_graph6(Graph(n, certificate))
    return CanonicalLabeling(form, tuple(order), tuple(search.generators))


def canonical_form(graph: Graph) -> bytes:
    """graph6 bytes that agree exactly for isomorphic graphs."""
    return canonical_labeling(graph).form
