"""
Family builder tests.
Tests cover standard families, products, amalgamations and the family spec grammar.
"""

import networkx as nx
import pytest

from config.settings import settings
from graphs.canonical import canonical_form
from graphs.construct import (
    FamilySpec,
    bloom,
    build_from_spec,
    cartesian_power,
    cartesian_product,
    center_regular_tree,
    complete_graph,
    complete_minus_edges,
    cycle_graph,
    disjoint_union,
    hypercube,
    hypercube_minus,
    identify,
    join,
    lexicographic_product,
    path_graph,
    random_connected_graph,
    standard_family,
    star_graph,
    y_graph,
    z_graph,
)
from graphs.errors import BadParameter, Disconnected, TooLarge
from graphs.graph import Graph, build_graph, is_connected, is_tree
from graphs.invariants import profile


def isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and canonical_form(a) == canonical_form(b)


class TestStandardFamilies:
    """Test cases for the standard family builders."""

    @pytest.mark.smoke
    @pytest.mark.construct
    @pytest.mark.parametrize("d", range(0, 6))
    def test_hypercube(self, d: int) -> None:
        """
        Test order, size and regularity of Q_d.

        Args:
            d: Dimension
        """
        cube = hypercube(d)
        assert cube.n == 2 ** d
        assert cube.edge_count() == d * 2 ** max(d - 1, 0)
        assert set(cube.degrees()) == {d}

    @pytest.mark.construct
    def test_punctured_hypercube(self) -> None:
        """Test that Q_2 minus a vertex is P_3 and Q_3 minus a vertex has 9 edges."""
        assert isomorphic(hypercube_minus(2), path_graph(3))
        assert hypercube_minus(3).n == 7
        assert hypercube_minus(3).edge_count() == 9

    @pytest.mark.construct
    def test_z_and_y_layouts(self) -> None:
        """Test the documented index layout of Z_k and Y_k."""
        z2 = z_graph(2)
        assert z2.n == 8
        assert z2.neighbors(6) == [0]
        assert z2.neighbors(7) == [3]
        y2 = y_graph(2)
        assert y2.n == 8
        assert y2.neighbors(7) == [2, 4]
        assert is_connected(y2)

    @pytest.mark.construct
    def test_complete_minus_matching(self) -> None:
        """Test the default removed matching and explicit edges."""
        graph = complete_minus_edges(5, 2)
        assert graph.edge_count() == 8
        assert not graph.adj[0] >> 1 & 1
        assert not graph.adj[2] >> 3 & 1
        explicit = complete_minus_edges(4, 1, [(1, 3)])
        assert not explicit.adj[1] >> 3 & 1

    @pytest.mark.construct
    @pytest.mark.negative
    @pytest.mark.parametrize(
        "builder, args",
        [
            (path_graph, (0,)),
            (cycle_graph, (2,)),
            (star_graph, (0,)),
            (hypercube_minus, (1,)),
            (z_graph, (0,)),
            (y_graph, (0,)),
            (complete_minus_edges, (4, 3)),
        ],
    )
    def test_bad_parameters(self, builder, args: tuple) -> None:
        """
        Test that out-of-range parameters raise BadParameter.

        Args:
            builder: Family builder
            args: Invalid arguments
        """
        with pytest.raises(BadParameter):
            builder(*args)

    @pytest.mark.construct
    @pytest.mark.negative
    def test_removed_edge_must_exist(self) -> None:
        """Test that removing a non-edge is rejected."""
        with pytest.raises(BadParameter):
            complete_minus_edges(4, 2, [(0, 1), (0, 1)])


class TestProducts:
    """Test cases for products and joins."""

    @pytest.mark.construct
    def test_cartesian_square_of_k2(self, k2: Graph, c4: Graph) -> None:
        """Test K_2 x K_2 = C_4."""
        assert isomorphic(cartesian_product(k2, k2), c4)

    @pytest.mark.construct
    def test_cartesian_power_is_hypercube(self, k2: Graph) -> None:
        """Test K_2^3 = Q_3."""
        assert isomorphic(cartesian_power(k2, 3), hypercube(3))
        assert cartesian_power(k2, 1) == k2

    @pytest.mark.construct
    def test_cartesian_index_layout(self) -> None:
        """Test that (g, h) has index g * n(H) + h."""
        product = cartesian_product(path_graph(3), path_graph(2))
        assert product.neighbors(0) == [1, 2]
        assert product.neighbors(3) == [1, 2, 5]

    @pytest.mark.construct
    def test_cartesian_matches_networkx(self, rng, as_networkx) -> None:
        """Test products of random factors against networkx."""
        for _ in range(10):
            g = random_connected_graph(rng.randint(1, 5), rng, 0.4)
            h = random_connected_graph(rng.randint(1, 5), rng, 0.4)
            expected = nx.cartesian_product(as_networkx(g), as_networkx(h))
            product = cartesian_product(g, h)
            edges = {
                tuple(sorted((x * h.n + y, u * h.n + v))) for (x, y), (u, v) in expected.edges()
            }
            assert set(product.edges()) == edges

    @pytest.mark.construct
    def test_lexicographic(self, k2: Graph, p3: Graph) -> None:
        """Test K_2[K_2] = K_4 and the size of P_3[K_2]."""
        assert isomorphic(lexicographic_product(k2, k2), complete_graph(4))
        assert lexicographic_product(p3, k2).edge_count() == 2 * 4 + 3

    @pytest.mark.construct
    def test_join_and_union(self, k1: Graph, c4: Graph) -> None:
        """Test the wheel K_1 + C_4 and a disjoint union."""
        wheel = join(k1, c4)
        assert wheel.n == 5
        assert wheel.edge_count() == 8
        assert wheel.degree(0) == 4
        union = disjoint_union(c4, c4)
        assert union.edge_count() == 8
        assert not is_connected(union)

    @pytest.mark.construct
    @pytest.mark.negative
    def test_capacity(self, monkeypatch) -> None:
        """Test that products beyond the configured capacity are rejected."""
        monkeypatch.setattr(settings, "MAX_ORDER", 20)
        with pytest.raises(TooLarge):
            cartesian_product(path_graph(5), path_graph(5))


class TestAttachments:
    """Test cases for blooms, center-regular trees and amalgamation."""

    @pytest.mark.construct
    def test_bloom(self, c4: Graph) -> None:
        """Test the order and pendant layout of a bloom."""
        graph = bloom(c4, 2)
        assert graph.n == 12
        assert graph.neighbors(4 + 1 * 2 + 1) == [1]
        assert isomorphic(bloom(complete_graph(1), 2), path_graph(3))

    @pytest.mark.construct
    @pytest.mark.negative
    def test_bloom_needs_connected_host(self) -> None:
        """Test that a disconnected host is rejected."""
        with pytest.raises(Disconnected):
            bloom(build_graph(2, []), 1)
        with pytest.raises(BadParameter):
            bloom(path_graph(2), 0)

    @pytest.mark.construct
    def test_center_regular_tree(self) -> None:
        """Test the orders of unicentral and bicentral trees."""
        uni = center_regular_tree([3, 1])
        assert uni.n == 1 + 3 + 3
        assert is_tree(uni)
        assert isomorphic(center_regular_tree([1], bicentral=True), path_graph(4))

    @pytest.mark.construct
    @pytest.mark.negative
    @pytest.mark.parametrize("degrees, bicentral", [([], False), ([1], False), ([2, 0], False), ([0], True)])
    def test_center_regular_tree_parameters(self, degrees: list[int], bicentral: bool) -> None:
        """
        Test rejected level degree sequences.

        Args:
            degrees: Level degrees
            bicentral: Two-root variant
        """
        with pytest.raises(BadParameter):
            center_regular_tree(degrees, bicentral)

    @pytest.mark.construct
    def test_identify(self, p3: Graph) -> None:
        """Test that gluing two paths end to end gives a longer path."""
        assert isomorphic(identify(p3, 2, p3, 0), path_graph(5))
        assert identify(p3, 1, p3, 1).degree(1) == 4

    @pytest.mark.construct
    def test_random_connected(self, rng) -> None:
        """Test that random connected graphs are connected."""
        for n in range(1, 15):
            assert is_connected(random_connected_graph(n, rng, 0.05))


class TestFamilySpecs:
    """Test cases for the family spec grammar."""

    @pytest.mark.smoke
    @pytest.mark.construct
    @pytest.mark.parametrize(
        "spec, n, edges",
        [
            ("path:5", 5, 4),
            ("c:6", 6, 6),
            ("complete:4", 4, 6),
            ("star:3", 4, 3),
            ("q:3", 8, 12),
            ("qminus:3", 7, 9),
            ("paw", 4, 4),
            ("z:2", 8, 8),
            ("y:1", 6, 6),
            ("kminus:5:2", 5, 8),
            ("crt:2,1", 5, 4),
            ("crt:1:bi", 4, 3),
            ("bloom:cycle:5:2", 15, 15),
            ("corpus:interval-7", 7, 9),
        ],
    )
    def test_build(self, spec: str, n: int, edges: int) -> None:
        """
        Test order and size of graphs built from spec strings.

        Args:
            spec: Family spec
            n: Expected order
            edges: Expected number of edges
        """
        graph = build_from_spec(spec)
        assert (graph.n, graph.edge_count()) == (n, edges)

    @pytest.mark.construct
    def test_parse(self) -> None:
        """Test the parsed structure of nested and named specs."""
        spec = FamilySpec.parse("bloom:crt:2,2:bi:1")
        assert spec.family == "bloom"
        assert spec.params == (1,)
        assert spec.base == FamilySpec("center_regular_tree", (2, 2), bicentral=True)
        assert FamilySpec.parse("corpus:two-level-6").name == "two-level-6"

    @pytest.mark.construct
    def test_labels(self) -> None:
        """Test provenance labels of built graphs."""
        assert build_from_spec("z:3").label == "z:3"
        assert build_from_spec("corpus:interval-8").label == "corpus:interval-8"

    @pytest.mark.construct
    @pytest.mark.negative
    @pytest.mark.parametrize(
        "spec",
        ["nope:3", "z:x", "path", "path:1:2", "crt:2:foo", "bloom:5", "corpus:missing", "corpus"],
    )
    def test_bad_specs(self, spec: str) -> None:
        """
        Test that malformed specs raise BadParameter.

        Args:
            spec: Invalid family spec
        """
        with pytest.raises(BadParameter):
            build_from_spec(spec)

    @pytest.mark.construct
    def test_standard_family_dispatch(self, c4: Graph) -> None:
        """Test direct dispatch for a cycle, the paw and K_6 minus a perfect matching."""
        assert isomorphic(standard_family(FamilySpec("cycle", (6,))), cycle_graph(6))
        paw = standard_family(FamilySpec("paw", ()))
        assert sorted(paw.degrees()) == [1, 2, 2, 3]
        cocktail = profile(standard_family(FamilySpec("complete_minus_edges", (6, 3))))
        assert (cocktail.c_w, cocktail.c_ec) == (1, 1)
