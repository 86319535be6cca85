"""
Diameter-2 suite: the transmission-degree formula and the equality classes
of graphs with diameter 2, over every connected graph up to a given order.
"""

from __future__ import annotations

from typing import Optional

from graphs.classify import is_bidegreed, is_regular
from graphs.construct import cycle_graph, disjoint_union, join, paw_graph, star_graph
from graphs.enumeration import CONNECTED, GeneratorConfig, connected_graphs
from graphs.errors import BadParameter
from graphs.graph import Graph
from graphs.invariants import InvariantProfile, profile
from suites.base_suite import BaseSuite, SuiteResult
from utils.logger import setup_logger

logger = setup_logger(__name__)

MAX_DIAM2_ORDER = 9


class Diam2Claims:
    """Claim ids and loci for the diameter-2 suite."""

    TR_DEGREE = ("transmission-degree", "ec(v) <= 2 gives Tr(v) = 2n - 2 - deg(v)")
    BOUND = ("diam2-bound", "diam(G) = 2 gives C_ec(G) <= C_W(G)")
    REGULAR = ("regular-self-centered", "regular 2-self-centered G has C_W = C_ec = 1")
    BIDEGREED = ("bidegreed-diam2", "bidegreed, non-self-centered G with diam 2 has C_W = C_ec = 2")
    EC_CAP = ("ec-cap", "C_ec(G) <= ceil(n/2)")
    PAW = ("paw-gap", "the paw has diam 2 and C_W = 3 > C_ec = 2")


class Diam2Suite(BaseSuite):
    """Exhaustive diameter-2 checks plus named instances."""

    name = "diam2"

    def __init__(self, max_n: int = 7, seed: Optional[int] = None) -> None:
        super().__init__(seed)
        if not 1 <= max_n <= MAX_DIAM2_ORDER:
            raise BadParameter(f"max_n must be in 1..{MAX_DIAM2_ORDER}, got {max_n}")
        self.max_n = max_n
        self.claims = Diam2Claims

    def check_graph(self, graph: Graph, prof: InvariantProfile) -> None:
        claims = self.claims
        n = graph.n
        self.expect(
            claims.EC_CAP,
            prof.c_ec <= (n + 1) // 2,
            lambda: f"{self.describe(graph)} (C_ec {prof.c_ec})",
        )
        if prof.diam != 2:
            return

        for v in range(n):
            if prof.ec[v] <= 2:
                self.expect_equal(
                    claims.TR_DEGREE,
                    prof.tr[v],
                    2 * n - 2 - graph.degree(v),
                    lambda: f"{self.describe(graph)} vertex {v}",
                )
        self.expect(
            claims.BOUND,
            prof.c_ec <= prof.c_w,
            lambda: f"{self.describe(graph)} (C_ec {prof.c_ec}, C_W {prof.c_w})",
        )
        if prof.c_ec == 1 and is_regular(graph):
            self.expect_equal(claims.REGULAR, (prof.c_w, prof.c_ec), (1, 1), lambda: self.describe(graph))
        if prof.c_ec != 1 and is_bidegreed(graph):
            self.expect_equal(claims.BIDEGREED, (prof.c_w, prof.c_ec), (2, 2), lambda: self.describe(graph))

    def run(self) -> None:
        claims = self.claims
        self.declare(*(value for key, value in vars(Diam2Claims).items() if key.isupper()))

        for n in range(1, self.max_n + 1):
            examined = diameter_two = 0
            for graph in connected_graphs(GeneratorConfig(n, CONNECTED)):
                prof = profile(graph)
                self.check_graph(graph, prof)
                examined += 1
                diameter_two += prof.diam == 2
            logger.debug(f"[{self.name}] n={n}: {examined} graphs, {diameter_two} of diameter 2")

        two_copies = disjoint_union(cycle_graph(3), cycle_graph(4))
        named = [
            cycle_graph(5),
            star_graph(4),
            paw_graph(),
            join(two_copies, two_copies),
        ]
        for graph in named:
            self.check_graph(graph, self.profile(graph))

        paw = self.profile(paw_graph())
        self.expect_equal(
            claims.PAW,
            (paw.diam, paw.tr_set, paw.ec_set),
            (2, (3, 4, 5), (1, 2)),
            lambda: self.describe(paw_graph()),
        )


def diam2_suite(max_n: int = 7, seed: Optional[int] = None) -> SuiteResult:
    return Diam2Suite(max_n, seed).execute()
