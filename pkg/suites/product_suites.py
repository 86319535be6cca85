"""
Cartesian product suites.

ProductIdentitySuite checks the identities and bounds that hold for every
pair of connected factors, on seeded random pairs plus a fixed corpus.
ProductEqualitySuite instantiates the hypotheses under which the Wiener
complexity of a product is exactly determined by the factors.
"""

from __future__ import annotations

from functools import partial
from itertools import product
from math import gcd
from typing import Optional

import numpy as np

from graphs.classify import arithmetic_step, transmission_indivisible
from graphs.codec import decode_graph6
from graphs.construct import (
    cartesian_power,
    cartesian_product,
    complete_graph,
    corpus_graph,
    cycle_graph,
    hypercube,
    path_graph,
    paw_graph,
    random_connected_graph,
    star_graph,
    z_graph,
)
from graphs.errors import BadParameter
from graphs.graph import Graph, all_pairs_distances
from search.runner import SearchTask, run_search
from suites.base_suite import BaseSuite, Claim, SuiteResult
from utils.logger import setup_logger

logger = setup_logger(__name__)

MAX_FACTOR_ORDER = 10


class ProductClaims:
    """Claim ids and loci for the product suites."""

    # Identities and bounds
    DISTANCE = ("distance-additivity", "d((g,h),(g',h')) = d_G(g,g') + d_H(h,h')")
    TRANSMISSION = ("transmission-identity", "Tr(g,h) = n(H) Tr_G(g) + n(G) Tr_H(h)")
    EC_SUM = ("ec-sum", "C_ec(G□H) = C_ec(G) + C_ec(H) - 1")
    EC_POWER = ("ec-power", "C_ec(G^(2^k)) = 2^k C_ec(G) - 2^k + 1")
    UPPER_LOWER = ("wiener-bounds", "max{C_W(G), C_W(H)} <= C_W(G□H) <= C_W(G) C_W(H)")
    LOWER = ("wiener-lower-bound", "C_W(G□H) >= C_W(G) + C_W(H) - 1")
    OBSERVATION = (
        "wiener-dominates-product",
        "C_W >= C_ec on both factors implies C_W >= C_ec on the product",
    )

    # Equalities
    COPRIME = (
        "coprime-product",
        "one factor transmission indivisible and gcd(n(G), n(H)) = 1 give C_W(G□H) = C_W(G) C_W(H)",
    )
    PRIMES = (
        "prime-order-family",
        "a transmission indivisible G times any graph of prime order > n(G) is multiplicative",
    )
    NESTED = (
        "nested-arithmetic",
        "arithmetic G, H with Tr(H) in Tr(G) and n(G) = n(H) give C_W(G□H) = C_W(G) + C_W(H) - 1",
    )
    WIENER_POWER = ("wiener-power", "arithmetic G gives C_W(G^(2^k)) = 2^k C_W(G) - 2^k + 1")
    SPREAD = (
        "spread-arithmetic",
        "arithmetic G, H with steps a, b and n(H)(C_W(G)-1)a < n(G)b give C_W(G□H) = C_W(G) C_W(H)",
    )
    REGULAR_FACTOR = ("regular-factor", "C_W(H) = 1 gives C_W(G□H) = C_W(G)")


def fixed_corpus() -> list[Graph]:
    """Small connected graphs every product suite pairs exhaustively."""
    return [
        complete_graph(2),
        path_graph(3),
        star_graph(3),
        cycle_graph(4),
        paw_graph(),
        z_graph(1),
        corpus_graph("arithmetic-6"),
        corpus_graph("two-level-6"),
    ]


class ProductIdentitySuite(BaseSuite):
    """
    Identities and bounds for G□H.

    Provides checks for:
    - distance additivity and the transmission identity
    - the eccentric complexity sum and its power form
    - the Wiener complexity bounds
    """

    name = "product-identity"

    def __init__(self, pair_budget: int = 200, max_order: int = 8, seed: Optional[int] = None) -> None:
        super().__init__(seed)
        if pair_budget < 0:
            raise BadParameter(f"pair_budget must be >= 0, got {pair_budget}")
        if not 1 <= max_order <= MAX_FACTOR_ORDER:
            raise BadParameter(f"max_order must be in 1..{MAX_FACTOR_ORDER}, got {max_order}")
        self.pair_budget = pair_budget
        self.max_order = max_order
        self.claims = ProductClaims

    def random_pairs(self) -> list[tuple[Graph, Graph]]:
        pairs = []
        for _ in range(self.pair_budget):
            factors = []
            for _ in range(2):
                n = self.rng.randint(1, self.max_order)
                factors.append(random_connected_graph(n, self.rng, self.rng.uniform(0.05, 0.6)))
            pairs.append((factors[0], factors[1]))
        return pairs

    def check_pair(self, g: Graph, h: Graph) -> None:
        claims = self.claims
        p = cartesian_product(g, h)
        pg, ph, pp = self.profile(g), self.profile(h), self.profile(p)
        witness = partial(self.describe, g, h)

        dg = all_pairs_distances(g).d.astype(np.int32)
        dh = all_pairs_distances(h).d.astype(np.int32)
        dp = all_pairs_distances(p).d.reshape(g.n, h.n, g.n, h.n)
        additive = np.array_equal(dp, dg[:, None, :, None] + dh[None, :, None, :])
        self.expect(claims.DISTANCE, additive, witness)

        expected_tr = tuple(h.n * pg.tr[x] + g.n * ph.tr[y] for x in range(g.n) for y in range(h.n))
        self.expect(claims.TRANSMISSION, pp.tr == expected_tr, witness)
        self.expect_equal(claims.EC_SUM, pp.c_ec, pg.c_ec + ph.c_ec - 1, witness)
        self.expect(
            claims.UPPER_LOWER,
            max(pg.c_w, ph.c_w) <= pp.c_w <= pg.c_w * ph.c_w,
            lambda: f"{self.describe(g, h)} (C_W {pg.c_w}, {ph.c_w} -> {pp.c_w})",
        )
        self.expect(
            claims.LOWER,
            pp.c_w >= pg.c_w + ph.c_w - 1,
            lambda: f"{self.describe(g, h)} (C_W {pg.c_w}, {ph.c_w} -> {pp.c_w})",
        )
        if pg.c_w >= pg.c_ec and ph.c_w >= ph.c_ec:
            self.expect(claims.OBSERVATION, pp.c_w >= pp.c_ec, witness)
        else:
            self.skip(claims.OBSERVATION, "a factor has C_ec > C_W")

    def check_powers(self, graph: Graph, max_k: int) -> None:
        base = self.profile(graph)
        for k in range(max_k + 1):
            power = self.profile(cartesian_power(graph, 2 ** k))
            self.expect_equal(
                self.claims.EC_POWER,
                power.c_ec,
                2 ** k * base.c_ec - 2 ** k + 1,
                lambda: f"{self.describe(graph)} k={k}",
            )

    def run(self) -> None:
        claims = self.claims
        self.declare(
            claims.DISTANCE,
            claims.TRANSMISSION,
            claims.EC_SUM,
            claims.EC_POWER,
            claims.UPPER_LOWER,
            claims.LOWER,
            claims.OBSERVATION,
        )
        corpus = fixed_corpus()
        pairs = list(product(corpus, repeat=2)) + self.random_pairs()
        logger.info(f"[{self.name}] checking {len(pairs)} factor pairs")
        for g, h in pairs:
            self.check_pair(g, h)
        for graph in corpus:
            self.check_powers(graph, 2 if graph.n <= 4 else 1)


class ProductEqualitySuite(BaseSuite):
    """
    Hypotheses under which C_W(G□H) is determined exactly.

    Hypotheses are verified on the instance before the conclusion is
    asserted; instances that miss the hypothesis are counted as skipped.
    """

    name = "product-equality"

    def __init__(self, pool_order: int = 5, seed: Optional[int] = None) -> None:
        super().__init__(seed)
        self.pool_order = pool_order
        self.claims = ProductClaims

    def arithmetic_pool(self) -> list[Graph]:
        """Non-transmission-regular arithmetic graphs: searched up to pool_order plus the corpus."""
        task = SearchTask(
            name="arithmetic-pool",
            universe=f"connected:2-{self.pool_order}",
            predicate="arithmetic",
        )
        report = run_search(task, workers=1, progress=False)
        pool = [decode_graph6(text).with_label(text) for text in report.witnesses]
        pool += [corpus_graph("arithmetic-6"), corpus_graph("two-level-6")]
        return [g for g in pool if self.profile(g).c_w >= 2]

    def check_coprime(self, g: Graph, h: Graph, claim: Claim = ProductClaims.COPRIME) -> None:
        pg, ph = self.profile(g), self.profile(h)
        indivisible = transmission_indivisible(pg) or transmission_indivisible(ph)
        if not indivisible or gcd(g.n, h.n) != 1:
            self.skip(claim, f"{self.describe(g, h)} misses the hypothesis")
            return
        pp = self.profile(cartesian_product(g, h))
        self.expect_equal(claim, pp.c_w, pg.c_w * ph.c_w, lambda: self.describe(g, h))

    def check_nested(self, g: Graph, h: Graph) -> None:
        pg, ph = self.profile(g), self.profile(h)
        arithmetic = arithmetic_step(pg) is not None and arithmetic_step(ph) is not None
        if not arithmetic or g.n != h.n or not set(ph.tr_set) <= set(pg.tr_set):
            self.skip(self.claims.NESTED, f"{self.describe(g, h)} misses the hypothesis")
            return
        pp = self.profile(cartesian_product(g, h))
        self.expect_equal(self.claims.NESTED, pp.c_w, pg.c_w + ph.c_w - 1, lambda: self.describe(g, h))

    def check_spread(self, g: Graph, h: Graph) -> None:
        pg, ph = self.profile(g), self.profile(h)
        a, b = arithmetic_step(pg), arithmetic_step(ph)
        if a is None or b is None or not h.n * (pg.c_w - 1) * a < g.n * b:
            self.skip(self.claims.SPREAD, f"{self.describe(g, h)} misses the hypothesis")
            return
        pp = self.profile(cartesian_product(g, h))
        self.expect_equal(self.claims.SPREAD, pp.c_w, pg.c_w * ph.c_w, lambda: self.describe(g, h))

    def check_wiener_power(self, graph: Graph, max_k: int) -> None:
        base = self.profile(graph)
        if arithmetic_step(base) is None:
            self.skip(self.claims.WIENER_POWER, f"{self.describe(graph)} is not arithmetic")
            return
        for k in range(max_k + 1):
            power = self.profile(cartesian_power(graph, 2 ** k))
            self.expect_equal(
                self.claims.WIENER_POWER,
                power.c_w,
                2 ** k * base.c_w - 2 ** k + 1,
                lambda: f"{self.describe(graph)} k={k}",
            )

    def check_regular_factor(self, g: Graph, h: Graph) -> None:
        if self.profile(h).c_w != 1:
            self.skip(self.claims.REGULAR_FACTOR, f"{self.describe(h)} is not transmission regular")
            return
        pp = self.profile(cartesian_product(g, h))
        self.expect_equal(
            self.claims.REGULAR_FACTOR, pp.c_w, self.profile(g).c_w, lambda: self.describe(g, h)
        )

    def run(self) -> None:
        claims = self.claims
        self.declare(
            claims.COPRIME,
            claims.PRIMES,
            claims.NESTED,
            claims.WIENER_POWER,
            claims.SPREAD,
            claims.REGULAR_FACTOR,
        )
        interval_7 = corpus_graph("interval-7")
        interval_8 = corpus_graph("interval-8")
        indivisible_11 = corpus_graph("indivisible-11")
        arithmetic_6 = corpus_graph("arithmetic-6")
        two_level_6 = corpus_graph("two-level-6")

        coprime_pairs = [
            (interval_7, cycle_graph(6)),
            (interval_7, path_graph(3)),
            (interval_7, arithmetic_6),
            (interval_8, path_graph(3)),
            (interval_8, interval_7),
            (indivisible_11, path_graph(4)),
            (z_graph(1), interval_7),
        ]
        for g, h in coprime_pairs:
            self.check_coprime(g, h)
        for prime in (11, 13, 17):
            self.check_coprime(interval_7, path_graph(prime), ProductClaims.PRIMES)
            self.check_coprime(interval_8, cycle_graph(prime), ProductClaims.PRIMES)

        pool = self.arithmetic_pool()
        logger.info(f"[{self.name}] arithmetic pool holds {len(pool)} graphs")
        for g, h in product(pool, repeat=2):
            self.check_nested(g, h)
            self.check_spread(g, h)

        for graph in (path_graph(3), path_graph(4), z_graph(1)):
            self.check_wiener_power(graph, 2 if graph.n <= 4 else 1)
        for graph in (arithmetic_6, two_level_6, interval_7):
            self.check_wiener_power(graph, 1)

        hosts = [cycle_graph(4), complete_graph(3), hypercube(3), cycle_graph(5)]
        for g in (z_graph(1), paw_graph(), arithmetic_6, interval_7):
            for h in hosts:
                self.check_regular_factor(g, h)


def product_identity_suite(
    pair_budget: int = 200, max_order: int = 8, seed: Optional[int] = None
) -> SuiteResult:
    return ProductIdentitySuite(pair_budget, max_order, seed).execute()


def product_equality_suite(seed: Optional[int] = None) -> SuiteResult:
    return ProductEqualitySuite(seed=seed).execute()
