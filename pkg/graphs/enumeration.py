"""
Isomorph-free generation of connected graphs and free trees.

Connected graphs grow one vertex at a time from K1. A child C = P + w is kept
only when w lies in the orbit of a canonically chosen deletable vertex m(C),
so every class of order n descends from exactly one class of order n - 1.
m(C) is picked among the non-cut vertices with the smallest
(degree, neighbour degree sum) key, ties broken by the largest canonical
position. Children of the same parent are deduplicated by canonical form.

Free trees come from rooted level sequences: trees with a single centroid
are rooted there, trees with two centroids are pairs of rooted halves.
"""

from __future__ import annotations

from typing import Iterator, Optional

from attrs import field, frozen

from config.settings import settings
from graphs.canonical import canonical_form, canonical_labeling
from graphs.errors import BadParameter
from graphs.graph import Graph, is_cut_vertex, iter_bits
from utils.logger import setup_logger

logger = setup_logger(__name__)

CONNECTED = "connected_graphs"
TREES = "trees"

MAX_CONNECTED_ORDER = 11
MAX_TREE_ORDER = 18


@frozen
class GeneratorConfig:
    """
    Attributes:
        n: Target order
        mode: CONNECTED or TREES
        min_degree: Keep only graphs with every degree >= this
        max_degree: Keep only graphs with every degree <= this (pruned during growth)
        shard: (index, count) partition of the search tree
        extended: Allow order 11 for connected graphs
    """

    n: int
    mode: str = CONNECTED
    min_degree: Optional[int] = None
    max_degree: Optional[int] = None
    shard: tuple[int, int] = field(default=(0, 1))
    extended: bool = False

    def __attrs_post_init__(self) -> None:
        if self.mode not in (CONNECTED, TREES):
            raise BadParameter(f"Unknown generator mode: {self.mode}")
        cap = MAX_CONNECTED_ORDER if self.mode == CONNECTED else MAX_TREE_ORDER
        if not 1 <= self.n <= cap:
            raise BadParameter(f"{self.mode} supports 1 <= n <= {cap}, got {self.n}")
        if self.mode == CONNECTED and self.n == MAX_CONNECTED_ORDER and not (
            self.extended or settings.EXTENDED
        ):
            raise BadParameter("Order 11 connected graphs need the extended flag")
        index, count = self.shard
        if count < 1 or not 0 <= index < count:
            raise BadParameter(f"Invalid shard {index}/{count}")

    def accepts_degrees(self, degrees: list[int]) -> bool:
        if self.min_degree is not None and min(degrees) < self.min_degree:
            return False
        if self.max_degree is not None and max(degrees) > self.max_degree:
            return False
        return True


def split_order(n: int) -> int:
    """Order at which the connected-graph search tree is partitioned into shards."""
    return max(1, min(n, n - 1 if n <= 8 else n - 2))


# ==================== Connected graphs ====================


def _delete_vertex(rows: tuple[int, ...], m: int) -> Graph:
    low = (1 << m) - 1
    kept = []
    for v, row in enumerate(rows):
        if v != m:
            kept.append(row & low | (row >> (m + 1)) << m)
    return Graph(len(kept), tuple(kept))


def _accept(rows: tuple[int, ...], parent_form: bytes) -> Optional[bytes]:
    """
    Canonical-deletion test for the child whose new vertex is the last one.

    Returns:
        The child's canonical form if accepted, else None
    """
    n = len(rows)
    w = n - 1
    degrees = [row.bit_count() for row in rows]
    keys = [
        (degrees[v], sum(degrees[u] for u in iter_bits(rows[v]))) for v in range(n)
    ]
    key_w = keys[w]
    for v in range(w):
        if keys[v] < key_w and not is_cut_vertex(rows, n, v):
            return None

    tied = [w] + [
        v for v in range(w) if keys[v] == key_w and not is_cut_vertex(rows, n, v)
    ]
    labeling = canonical_labeling(Graph(n, rows))
    if len(tied) == 1:
        return labeling.form
    position = labeling.position
    chosen = max(tied, key=lambda v: position[v])
    if chosen == w or canonical_form(_delete_vertex(rows, chosen)) == parent_form:
        return labeling.form
    return None


class _Grower:
    def __init__(self, config: GeneratorConfig) -> None:
        self.config = config
        self.split = split_order(config.n)
        self.counter = 0
        self.examined = 0

    def grow(self, rows: tuple[int, ...], form: bytes) -> Iterator[Graph]:
        config = self.config
        order = len(rows)
        if order == self.split:
            index = self.counter
            self.counter += 1
            if index % config.shard[1] != config.shard[0]:
                return
        if order == config.n:
            if config.accepts_degrees([row.bit_count() for row in rows]):
                yield Graph(order, rows)
            return

        max_degree = config.max_degree
        full_degree = 0
        if max_degree is not None:
            for v, row in enumerate(rows):
                if row.bit_count() >= max_degree:
                    full_degree |= 1 << v

        seen: set[bytes] = set()
        for subset in range(1, 1 << order):
            if max_degree is not None and (
                subset.bit_count() > max_degree or subset & full_degree
            ):
                continue
            child = list(rows)
            for u in iter_bits(subset):
                child[u] |= 1 << order
            child.append(subset)
            child_rows = tuple(child)
            self.examined += 1
            child_form = _accept(child_rows, form)
            if child_form is None or child_form in seen:
                continue
            seen.add(child_form)
            yield from self.grow(child_rows, child_form)


def connected_graphs(config: GeneratorConfig) -> Iterator[Graph]:
    """
    One representative per isomorphism class of connected graphs of order n.

    Output order is deterministic for a fixed shard configuration.

    Raises:
        BadParameter: If the config is not in connected-graphs mode
    """
    if config.mode != CONNECTED:
        raise BadParameter(f"connected_graphs needs mode {CONNECTED}, got {config.mode}")
    logger.debug(
        f"Generating connected graphs n={config.n} shard={config.shard[0]}/{config.shard[1]}"
    )
    root = (0,)
    grower = _Grower(config)
    yield from grower.grow(root, canonical_form(Graph(1, root)))
    logger.debug(f"Examined {grower.examined} candidate augmentations for n={config.n}")


# ==================== Trees ====================


def rooted_level_sequences(m: int) -> Iterator[list[int]]:
    """
    Canonical level sequences of rooted trees with m vertices (root level 0).

    Yields sequences from the path down to the star; the yielded list is
    reused, so copy it to keep it.
    """
    seq = list(range(m))
    while True:
        yield seq
        p = m - 1
        while p > 0 and seq[p] == 1:
            p -= 1
        if p == 0:
            return
        q = p - 1
        while seq[q] != seq[p] - 1:
            q -= 1
        for i in range(p, m):
            seq[i] = seq[i - (p - q)]


def _sequence_edges(seq: list[int], offset: int = 0) -> list[tuple[int, int]]:
    edges = []
    stack: list[int] = []
    for i, level in enumerate(seq):
        del stack[level:]
        if stack:
            edges.append((stack[-1] + offset, i + offset))
        stack.append(i)
    return edges


def _branch_sizes(seq: list[int]) -> list[int]:
    starts = [i for i, level in enumerate(seq) if level == 1]
    ends = starts[1:] + [len(seq)]
    return [end - start for start, end in zip(starts, ends)]


def _free_trees(n: int) -> Iterator[Graph]:
    for seq in rooted_level_sequences(n):
        if all(2 * size < n for size in _branch_sizes(seq)):
            yield Graph.from_edges(n, _sequence_edges(seq))
    if n % 2 == 0:
        half = n // 2
        halves = [list(seq) for seq in rooted_level_sequences(half)]
        for i, left in enumerate(halves):
            for right in halves[i:]:
                edges = _sequence_edges(left) + _sequence_edges(right, half) + [(0, half)]
                yield Graph.from_edges(n, edges)


def trees(config: GeneratorConfig) -> Iterator[Graph]:
    """
    One representative per isomorphism class of free trees of order n.

    Sharding keeps the trees whose emission index is congruent to the shard
    index.

    Raises:
        BadParameter: If the config is not in trees mode
    """
    if config.mode != TREES:
        raise BadParameter(f"trees needs mode {TREES}, got {config.mode}")
    index, count = config.shard
    for position, tree in enumerate(_free_trees(config.n)):
        if position % count == index and config.accepts_degrees(tree.degrees()):
            yield tree


def generate(config: GeneratorConfig) -> Iterator[Graph]:
    """Dispatch on the config mode."""
    if config.mode == TREES:
        return trees(config)
    return connected_graphs(config)
