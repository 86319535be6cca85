"""
Named search predicates and histogram keys.

Predicates compose with "+": "interval-irregular+biconnected" holds when both do.
Each takes a Facts object that computes the profile and the classification
report lazily, once per graph.
"""

from __future__ import annotations

from functools import cached_property
from typing import Callable

from graphs.classify import (
    ClassificationReport,
    arithmetic_step,
    classify,
    interval_irregular,
    is_center_regular_tree,
    transmission_indivisible,
)
from graphs.codec import graph6_text
from graphs.errors import BadParameter
from graphs.graph import Graph, is_biconnected, is_tree
from graphs.invariants import InvariantProfile, profile
from utils.helpers import format_interval


class Facts:
    """Lazily computed facts about one graph."""

    def __init__(self, graph: Graph) -> None:
        self.graph = graph

    @cached_property
    def profile(self) -> InvariantProfile:
        return profile(self.graph)

    @cached_property
    def report(self) -> ClassificationReport:
        return classify(self.graph, self.profile)

    @cached_property
    def biconnected(self) -> bool:
        return self.graph.n >= 3 and is_biconnected(self.graph)

    @cached_property
    def tree(self) -> bool:
        return is_tree(self.graph)

    @cached_property
    def graph6(self) -> str:
        return graph6_text(self.graph)


Predicate = Callable[[Facts], bool]

PREDICATES: dict[str, Predicate] = {
    "any": lambda f: True,
    "interval-irregular": lambda f: interval_irregular(f.profile),
    "transmission-indivisible": lambda f: transmission_indivisible(f.profile),
    "indivisible-not-interval": lambda f: (
        transmission_indivisible(f.profile) and not interval_irregular(f.profile)
    ),
    "transmission-irregular": lambda f: f.profile.c_w == f.profile.n,
    "transmission-regular": lambda f: f.profile.c_w == 1,
    "arithmetic": lambda f: arithmetic_step(f.profile) is not None,
    "self-centered": lambda f: f.profile.c_ec == 1,
    "ec-exceeds-w": lambda f: f.profile.c_ec > f.profile.c_w,
    "ec-equals-w": lambda f: f.profile.c_ec == f.profile.c_w,
    "w-exceeds-ec": lambda f: f.profile.c_w > f.profile.c_ec,
    "diam2": lambda f: f.profile.diam == 2,
    "diam3": lambda f: f.profile.diam == 3,
    "biconnected": lambda f: f.biconnected,
    "tree": lambda f: f.tree,
    "center-regular-tree": lambda f: f.tree and is_center_regular_tree(f.graph),
    "ud-graph": lambda f: bool(f.report.ud_pairs),
}

HISTOGRAMS: dict[str, Callable[[Facts], str]] = {
    "tr-interval": lambda f: format_interval(f.profile.tr_set[0], f.profile.tr_set[-1]),
    "biconnected": lambda f: str(f.biconnected).lower(),
    "tree": lambda f: str(f.tree).lower(),
    "c_w": lambda f: str(f.profile.c_w),
    "c_ec": lambda f: str(f.profile.c_ec),
    "diam": lambda f: str(f.profile.diam),
}


def predicate_names(expression: str) -> tuple[str, ...]:
    """
    Split and validate a "+"-joined predicate expression.

    Raises:
        BadParameter: If a name is unknown
    """
    names = tuple(part.strip() for part in expression.split("+") if part.strip())
    if not names:
        raise BadParameter("Empty predicate expression")
    for name in names:
        if name not in PREDICATES:
            known = ", ".join(sorted(PREDICATES))
            raise BadParameter(f"Unknown predicate {name!r}; known: {known}")
    return names


def check_histograms(names: tuple[str, ...]) -> None:
    for name in names:
        if name not in HISTOGRAMS:
            known = ", ".join(sorted(HISTOGRAMS))
            raise BadParameter(f"Unknown histogram {name!r}; known: {known}")


def evaluate(names: tuple[str, ...], facts: Facts) -> bool:
    return all(PREDICATES[name](facts) for name in names)
