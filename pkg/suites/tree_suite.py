"""
Tree suite: C_ec(T) <= C_W(T) for every tree, with equality exactly for
center-regular trees, checked over every free tree up to a given order.
"""

from __future__ import annotations

from typing import Optional

from graphs.classify import is_center_regular_tree
from graphs.construct import center_regular_tree, corpus_graph, star_graph
from graphs.enumeration import MAX_TREE_ORDER, TREES, GeneratorConfig, trees
from graphs.errors import BadParameter
from graphs.graph import Graph
from suites.base_suite import BaseSuite, SuiteResult
from utils.logger import setup_logger

logger = setup_logger(__name__)


class TreeClaims:
    """Claim ids and loci for the tree suite."""

    BOUND = ("tree-bound", "C_ec(T) <= C_W(T) for every tree")
    EQUALITY = ("tree-equality", "C_ec(T) = C_W(T) iff T is center-regular")
    CONSTRUCTED = ("center-regular-equality", "constructed center-regular trees have C_W = C_ec")
    UNICENTRAL = ("unicentral-diameter", "a tree with one central vertex has diam = 2 rad")
    BICENTRAL = ("bicentral-diameter", "a tree with two central vertices has diam = 2 rad - 1")


# Level-degree sequences of the constructed center-regular trees: (degrees, bicentral)
CONSTRUCTED_TREES = (
    ((2,), False),
    ((3,), False),
    ((2, 2), False),
    ((3, 2), False),
    ((2, 3, 1), False),
    ((4, 1, 2), False),
    ((1,), True),
    ((2,), True),
    ((2, 2), True),
    ((3, 1, 2), True),
)


class TreeSuite(BaseSuite):
    """Exhaustive tree checks plus constructed and corpus trees."""

    name = "tree"

    def __init__(self, max_n: int = 14, seed: Optional[int] = None) -> None:
        super().__init__(seed)
        if not 1 <= max_n <= MAX_TREE_ORDER:
            raise BadParameter(f"max_n must be in 1..{MAX_TREE_ORDER}, got {max_n}")
        self.max_n = max_n
        self.claims = TreeClaims

    def check_tree(self, tree: Graph) -> None:
        claims = self.claims
        prof = self.profile(tree)
        self.expect(
            claims.BOUND,
            prof.c_ec <= prof.c_w,
            lambda: f"{self.describe(tree)} (C_ec {prof.c_ec}, C_W {prof.c_w})",
        )
        regular = is_center_regular_tree(tree)
        self.expect(
            claims.EQUALITY,
            (prof.c_ec == prof.c_w) == regular,
            lambda: f"{self.describe(tree)} (center-regular={regular}, C_ec {prof.c_ec}, C_W {prof.c_w})",
        )
        if len(prof.center) == 1:
            self.expect_equal(claims.UNICENTRAL, prof.diam, 2 * prof.rad, lambda: self.describe(tree))
        else:
            self.expect_equal(claims.BICENTRAL, prof.diam, 2 * prof.rad - 1, lambda: self.describe(tree))

    def run(self) -> None:
        claims = self.claims
        self.declare(claims.BOUND, claims.EQUALITY, claims.CONSTRUCTED, claims.UNICENTRAL, claims.BICENTRAL)
        total = 0
        for n in range(1, self.max_n + 1):
            count = 0
            for tree in trees(GeneratorConfig(n, TREES)):
                self.check_tree(tree)
                count += 1
            logger.debug(f"[{self.name}] n={n}: {count} trees")
            total += count
        logger.info(f"[{self.name}] checked {total} free trees up to order {self.max_n}")

        for degrees, bicentral in CONSTRUCTED_TREES:
            tree = center_regular_tree(degrees, bicentral=bicentral)
            prof = self.profile(tree)
            self.expect_equal(claims.CONSTRUCTED, prof.c_w, prof.c_ec, lambda: self.describe(tree))
            self.check_tree(tree)

        self.check_tree(star_graph(4))
        self.check_tree(corpus_graph("irregular-tree-7"))


def tree_suite(max_n: int = 14, seed: Optional[int] = None) -> SuiteResult:
    return TreeSuite(max_n, seed).execute()
