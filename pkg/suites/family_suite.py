"""
Family suite: closed-form complexities of constructed graph families.

Covers punctured hypercubes, the Z_k and Y_k graphs and their products and
powers, lexicographic products of paths, pendant blooms of vertex-transitive
hosts, complete graphs minus a matching, and the UD amalgamation that turns
C_ec > C_W graphs into larger ones.
"""

from __future__ import annotations

from typing import Optional

from graphs.classify import arithmetic_step, is_regular, ud_pairs
from graphs.construct import (
    bloom,
    cartesian_power,
    cartesian_product,
    center_regular_tree,
    complete_graph,
    complete_minus_edges,
    corpus_graph,
    cycle_graph,
    disjoint_union,
    hypercube,
    hypercube_minus,
    identify,
    join,
    lexicographic_product,
    path_graph,
    paw_graph,
    y_graph,
    z_graph,
)
from graphs.errors import BadParameter
from graphs.graph import Graph
from suites.base_suite import BaseSuite, SuiteResult
from utils.logger import setup_logger

logger = setup_logger(__name__)


class FamilyClaims:
    """Claim ids and loci for the family suite."""

    # Punctured hypercubes
    QMINUS = ("qminus-gap", "C_W(Q_d^-) - C_ec(Q_d^-) = d - 2")
    QMINUS_EC = ("qminus-eccentricity", "in Q_d^- the all-ones vertex has ec d - 1, all others d")
    LARGER_DIAMETER = ("larger-diameter", "every d >= 2 has a graph of diameter d with C_W > C_ec")

    # Z_k, Y_k and their products
    Z_TRANSMISSION = ("z-transmission", "Tr(Z_k) = {(k+1)^2 + k + 3, (k+1)^2 + 3k + 5}")
    Z_ECCENTRICITY = ("z-eccentricity", "Ec(Z_k) = {k+1, k+2, k+3} and C_ec(Z_k) - C_W(Z_k) = 1")
    Z_POWER = ("z-power", "C_ec(Z^(2^k)) = 2^(k+1) + 1 and C_W(Z^(2^k)) = 2^k + 1")
    ARITHMETIC_POWER = (
        "arithmetic-power",
        "arithmetic G with C_ec(G) > C_W(G) keeps C_ec > C_W in G^(2^k)",
    )
    CUBE_FACTOR = ("cube-factor", "C_ec(G) > C_W(G) gives C_ec(G□Q_d) > C_W(G□Q_d)")
    Y_GAP = ("y-gap", "C_ec(Y_k) > C_W(Y_k), n(Y_k) = 2k + 4 and Y_1 has the profile of Z_1")
    YZ_TABLE = ("yz-table", "C_ec(Y_k□Z_k) - C_W(Y_k□Z_k) is 1, 0, 0, -2 for k = 2, 3, 4, 5")
    UD_AMALGAMATION = (
        "ud-amalgamation",
        "gluing center-regular trees on a UD pair with equal transmissions keeps C_ec > C_W "
        "and adds rad(T) to C_ec",
    )

    # Equality families
    HOST = ("regular-host", "C_n, K_n and Q_d are self-centered and transmission regular")
    CARTESIAN_HOST = (
        "cartesian-host",
        "C_W(G) = C_ec(G) and H self-centered transmission regular give "
        "C_ec(G□H) = C_W(G□H) = C_W(G)",
    )
    LEXICOGRAPHIC = ("lexicographic-path", "regular H and n >= 4 give C_W(P_n∘H) = C_ec(P_n∘H) = ceil(n/2)")
    BLOOM = ("bloom-equality", "vertex-transitive G gives C_ec(G^(k*)) = C_W(G^(k*)) = 2")
    BLOOM_OFFSET = ("bloom-offset", "a pendant of v has Tr(v) + n(G)(k+1) - 2")
    COMPLETE_MINUS = (
        "complete-minus-edges",
        "regular or bidegreed K_n minus k <= n/2 edges has C_W = C_ec",
    )
    REGULAR_JOIN = (
        "regular-join",
        "the join of two copies of a regular graph is regular, 2-self-centered, C_W = C_ec = 1",
    )
    CYCLE = ("cycle-transmission", "every vertex of C_n has transmission floor(n^2/4)")


YZ_DIFFERENCES = {2: 1, 3: 0, 4: 0, 5: -2}


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


class FamilySuite(BaseSuite):
    """
    Closed forms over constructed families.

    Provides checks for:
    - punctured hypercubes and the larger-diameter examples
    - Z_k / Y_k formulas, powers and products
    - the equality families (hosts, blooms, lexicographic products, K_n minus edges)
    """

    name = "family"

    def __init__(
        self,
        max_cube_dim: int = 10,
        max_z_power: int = 2,
        seed: Optional[int] = None,
    ) -> None:
        super().__init__(seed)
        if max_cube_dim < 2:
            raise BadParameter(f"max_cube_dim must be >= 2, got {max_cube_dim}")
        if not 0 <= max_z_power <= 2:
            raise BadParameter(f"max_z_power must be in 0..2, got {max_z_power}")
        self.max_cube_dim = max_cube_dim
        self.max_z_power = max_z_power
        self.claims = FamilyClaims

    # Punctured hypercubes
    def check_punctured_cubes(self) -> None:
        claims = self.claims
        for d in range(2, self.max_cube_dim + 1):
            graph = hypercube_minus(d)
            prof = self.profile(graph)
            witness = f"qminus:{d}"
            self.expect_equal(claims.QMINUS, prof.c_w - prof.c_ec, d - 2, witness)
            all_ones = graph.n - 1
            expected = tuple(d - 1 if v == all_ones else d for v in range(graph.n))
            self.expect(claims.QMINUS_EC, prof.ec == expected, witness)
            if d >= 3:
                self.expect(claims.LARGER_DIAMETER, prof.diam == d and prof.c_w > prof.c_ec, witness)
            # Q_2^- is P_3, diameter 2 comes from the paw instead
        paw = self.profile(paw_graph())
        self.expect(claims.LARGER_DIAMETER, paw.diam == 2 and paw.c_w > paw.c_ec, "paw")

    # Z_k and Y_k
    def check_z_family(self) -> None:
        claims = self.claims
        for k in range(1, 21):
            graph = z_graph(k)
            prof = self.profile(graph)
            cycle_tr = (k + 1) ** 2 + k + 3
            pendant_tr = (k + 1) ** 2 + 3 * k + 5
            expected = tuple([cycle_tr] * (2 * k + 2) + [pendant_tr] * 2)
            self.expect_equal(claims.Z_TRANSMISSION, prof.tr, expected, f"z:{k}")
            self.expect_equal(
                claims.Z_ECCENTRICITY,
                (prof.ec_set, prof.c_ec - prof.c_w),
                ((k + 1, k + 2, k + 3), 1),
                f"z:{k}",
            )

        z = z_graph(1)
        for k in range(self.max_z_power + 1):
            prof = self.profile(cartesian_power(z, 2 ** k))
            self.expect_equal(
                claims.Z_POWER,
                (prof.c_ec, prof.c_w),
                (2 ** (k + 1) + 1, 2 ** k + 1),
                f"z:1 to the power {2 ** k}",
            )

        for k in range(1, 4):
            graph = z_graph(k)
            base = self.profile(graph)
            if arithmetic_step(base) is None or base.c_ec <= base.c_w:
                self.skip(claims.ARITHMETIC_POWER, f"z:{k} misses the hypothesis")
                continue
            square = self.profile(cartesian_power(graph, 2))
            self.expect(claims.ARITHMETIC_POWER, square.c_ec > square.c_w, f"z:{k} squared")

        for graph in (z_graph(1), z_graph(2), y_graph(2)):
            base = self.profile(graph)
            if base.c_ec <= base.c_w:
                self.skip(claims.CUBE_FACTOR, f"{graph.label} has C_ec <= C_W")
                continue
            for d in range(1, 4):
                prof = self.profile(cartesian_product(graph, hypercube(d)))
                self.expect(claims.CUBE_FACTOR, prof.c_ec > prof.c_w, f"{graph.label} x hypercube:{d}")

    def check_y_family(self) -> None:
        claims = self.claims
        z_profile = self.profile(z_graph(1))
        for k in range(1, 7):
            graph = y_graph(k)
            prof = self.profile(graph)
            ok = prof.c_ec > prof.c_w and graph.n == 2 * k + 4
            if k == 1:
                ok = ok and (prof.tr_set, prof.ec_set) == (z_profile.tr_set, z_profile.ec_set)
            self.expect(claims.Y_GAP, ok, f"y:{k}")

        for k, difference in YZ_DIFFERENCES.items():
            prof = self.profile(cartesian_product(y_graph(k), z_graph(k)))
            self.expect_equal(claims.YZ_TABLE, prof.c_ec - prof.c_w, difference, f"y:{k} x z:{k}")

    def check_ud_amalgamation(self) -> None:
        claims = self.claims
        bases = [z_graph(1), z_graph(2), z_graph(3), y_graph(2), y_graph(3)]
        trees = [center_regular_tree((2,)), center_regular_tree((3,)), center_regular_tree((2, 2))]
        for base in bases:
            base_profile = self.profile(base)
            pairs = [
                (v, w) for v, w in ud_pairs(base) if base_profile.tr[v] == base_profile.tr[w]
            ]
            if not pairs or base_profile.c_ec <= base_profile.c_w:
                self.skip(claims.UD_AMALGAMATION, f"{base.label} has no UD pair with equal transmissions")
                continue
            v, w = pairs[0]
            for tree in trees:
                tree_profile = self.profile(tree)
                x = tree_profile.center[0]
                glued = identify(identify(base, v, tree, x), w, tree, x)
                prof = self.profile(glued)
                self.expect(
                    claims.UD_AMALGAMATION,
                    prof.c_ec > prof.c_w and prof.c_ec == base_profile.c_ec + tree_profile.rad,
                    lambda: f"{self.describe(base, tree)} (C_ec {prof.c_ec}, C_W {prof.c_w})",
                )

    # Equality families
    def hosts(self) -> list[Graph]:
        """Self-centered transmission-regular hosts; each is verified as such."""
        candidates = [cycle_graph(n) for n in range(3, 7)]
        candidates += [complete_graph(n) for n in range(2, 5)]
        candidates += [hypercube(d) for d in range(1, 4)]
        hosts = []
        for host in candidates:
            prof = self.profile(host)
            if self.expect(self.claims.HOST, (prof.c_w, prof.c_ec) == (1, 1), host.label):
                hosts.append(host)
        return hosts

    def check_cartesian_hosts(self, hosts: list[Graph]) -> None:
        factors = [
            path_graph(4),
            path_graph(5),
            cycle_graph(5),
            corpus_graph("two-level-6"),
            center_regular_tree((2, 2)),
            paw_graph(),
        ]
        for g in factors:
            base = self.profile(g)
            if base.c_w != base.c_ec:
                self.skip(self.claims.CARTESIAN_HOST, f"{g.label} has C_W != C_ec")
                continue
            for h in hosts:
                prof = self.profile(cartesian_product(g, h))
                self.expect_equal(
                    self.claims.CARTESIAN_HOST,
                    (prof.c_ec, prof.c_w),
                    (base.c_w, base.c_w),
                    lambda: self.describe(g, h),
                )

    def check_lexicographic(self) -> None:
        inner = [complete_graph(1), cycle_graph(3), cycle_graph(4), complete_graph(4)]
        for n in range(4, 10):
            for h in inner:
                prof = self.profile(lexicographic_product(path_graph(n), h))
                self.expect_equal(
                    self.claims.LEXICOGRAPHIC,
                    (prof.c_w, prof.c_ec),
                    (_ceil_half(n), _ceil_half(n)),
                    f"path:{n} o {h.label}",
                )

    def check_blooms(self, hosts: list[Graph]) -> None:
        claims = self.claims
        instances = [(host, k) for host in hosts for k in range(1, 4)]
        instances += [(complete_graph(1), 2), (complete_graph(1), 3)]
        for host, k in instances:
            graph = bloom(host, k)
            prof = self.profile(graph)
            witness = f"bloom:{host.label}:{k}"
            self.expect_equal(claims.BLOOM, (prof.c_ec, prof.c_w), (2, 2), witness)
            n = host.n
            offsets = {
                prof.tr[n + v * k + j] - prof.tr[v] for v in range(n) for j in range(k)
            }
            self.expect_equal(claims.BLOOM_OFFSET, offsets, {n * (k + 1) - 2}, witness)

    def check_complete_minus_edges(self) -> None:
        for n in range(4, 10):
            for k in range(1, n // 2 + 1):
                graph = complete_minus_edges(n, k)
                degrees = set(graph.degrees())
                if len(degrees) > 2:
                    self.skip(self.claims.COMPLETE_MINUS, f"kminus:{n}:{k} is neither regular nor bidegreed")
                    continue
                prof = self.profile(graph)
                self.expect_equal(self.claims.COMPLETE_MINUS, prof.c_w, prof.c_ec, f"kminus:{n}:{k}")

    def check_regular_join(self) -> None:
        two_cycles = disjoint_union(cycle_graph(3), cycle_graph(4))
        graph = join(two_cycles, two_cycles)
        prof = self.profile(graph)
        self.expect(
            self.claims.REGULAR_JOIN,
            is_regular(graph) and prof.ec_set == (2,) and prof.c_w == 1,
            self.describe(graph),
        )

    def check_cycles(self) -> None:
        for n in range(3, 21):
            prof = self.profile(cycle_graph(n))
            self.expect_equal(self.claims.CYCLE, prof.tr_set, (n * n // 4,), f"cycle:{n}")

    def run(self) -> None:
        self.declare(*(value for key, value in vars(FamilyClaims).items() if key.isupper()))
        self.check_punctured_cubes()
        self.check_z_family()
        self.check_y_family()
        self.check_ud_amalgamation()
        hosts = self.hosts()
        self.check_cartesian_hosts(hosts)
        self.check_lexicographic()
        self.check_blooms(hosts)
        self.check_complete_minus_edges()
        self.check_regular_join()
        self.check_cycles()


def family_suite(
    max_cube_dim: int = 10, max_z_power: int = 2, seed: Optional[int] = None
) -> SuiteResult:
    return FamilySuite(max_cube_dim, max_z_power, seed).execute()
