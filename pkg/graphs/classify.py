"""
Class membership tests built on the invariant profile.

Profile-level helpers take an InvariantProfile so that searches can test a
single class without building the full report.
"""

from __future__ import annotations

from typing import Any, Optional

import numpy as np
from attrs import asdict, frozen

from graphs.errors import NotATree
from graphs.graph import Graph, all_pairs_distances, is_tree
from graphs.invariants import InvariantProfile, distance_levels, profile
from utils.logger import setup_logger

logger = setup_logger(__name__)


def transmission_indivisible(prof: InvariantProfile) -> bool:
    """No two vertices have transmissions congruent modulo n."""
    return len({t % prof.n for t in prof.tr}) == prof.n


def interval_irregular(prof: InvariantProfile) -> bool:
    """Transmissions are n consecutive integers."""
    return prof.c_w == prof.n and prof.tr_set[-1] - prof.tr_set[0] == prof.n - 1


def arithmetic_step(prof: InvariantProfile) -> Optional[int]:
    """
    Common difference of the sorted transmission set.

    Returns:
        0 for a single transmission, the step for an arithmetic progression,
        otherwise None
    """
    values = prof.tr_set
    if len(values) == 1:
        return 0
    step = values[1] - values[0]
    if all(b - a == step for a, b in zip(values, values[1:])):
        return step
    return None


def is_bidegreed(graph: Graph) -> bool:
    """Exactly two distinct degrees occur."""
    return len(set(graph.degrees())) == 2


def is_regular(graph: Graph) -> bool:
    return len(set(graph.degrees())) <= 1


@frozen
class ClassificationReport:
    """
    Membership flags for every graph class, plus arithmetic step and UD pairs.
    """

    transmission_regular: bool
    transmission_irregular: bool
    transmission_indivisible: bool
    interval_irregular: bool
    arithmetic_step: Optional[int]
    self_centered: bool
    k_self_centered: Optional[int]
    regular: bool
    bidegreed: bool
    center_regular_tree: bool
    ud_pairs: tuple[tuple[int, int], ...]

    def to_record(self) -> dict[str, Any]:
        record = asdict(self)
        record["ud_pairs"] = [list(pair) for pair in self.ud_pairs]
        return record


def is_center_regular_tree(tree: Graph) -> bool:
    """
    Check that every distance level from the center has a single degree.

    For a bicentral tree level 0 holds both central vertices, so their degrees
    must agree as well.

    Raises:
        NotATree: If the graph is not a tree
    """
    if not is_tree(tree):
        raise NotATree(f"Graph of order {tree.n} is not a tree")
    for level in distance_levels(tree):
        if len({tree.degree(v) for v in level}) > 1:
            return False
    return True


def ud_pairs(graph: Graph) -> list[tuple[int, int]]:
    """
    Universally diametrical pairs.

    A diametrical pair (u, v) qualifies when every other vertex has u or v in
    its eccentric set.

    Returns:
        Qualifying pairs (u < v), sorted lexicographically

    Raises:
        Disconnected: If the graph is disconnected
    """
    if graph.n < 2:
        return []
    d = all_pairs_distances(graph).d
    ec = d.max(axis=1)
    eccentric = d == ec[:, None]
    diam = int(ec.max())

    pairs = []
    for u, v in zip(*np.nonzero(np.triu(d == diam, k=1))):
        covered = eccentric[:, u] | eccentric[:, v]
        covered[[u, v]] = True
        if covered.all():
            pairs.append((int(u), int(v)))
    return sorted(pairs)


def classify(graph: Graph, prof: Optional[InvariantProfile] = None) -> ClassificationReport:
    """
    Compute every class flag from one invariant profile.

    Args:
        graph: Connected graph
        prof: Precomputed profile of the same graph, if available

    Returns:
        ClassificationReport

    Raises:
        Disconnected: If the graph is disconnected
    """
    prof = prof or profile(graph)
    self_centered = prof.c_ec == 1
    return ClassificationReport(
        transmission_regular=prof.c_w == 1,
        transmission_irregular=prof.c_w == prof.n,
        transmission_indivisible=transmission_indivisible(prof),
        interval_irregular=interval_irregular(prof),
        arithmetic_step=arithmetic_step(prof),
        self_centered=self_centered,
        k_self_centered=prof.rad if self_centered else None,
        regular=is_regular(graph),
        bidegreed=is_bidegreed(graph),
        center_regular_tree=is_tree(graph) and is_center_regular_tree(graph),
        ud_pairs=tuple(ud_pairs(graph)),
    )
