"""
Canonical labeling tests.
Tests cover relabelling invariance, separation of non-isomorphic graphs and automorphism generators.
"""

import itertools

import networkx as nx
import pytest

from graphs.canonical import canonical_form, canonical_labeling
from graphs.codec import decode_graph6
from graphs.construct import cycle_graph, hypercube, path_graph, random_connected_graph
from graphs.errors import TooLarge
from graphs.graph import Graph


class TestCanonicalForm:
    """Test cases for canonical forms."""

    @pytest.mark.smoke
    @pytest.mark.canonical
    def test_invariant_under_relabelling(self, rng) -> None:
        """Test that random relabellings of a graph share one form."""
        for _ in range(20):
            graph = random_connected_graph(rng.randint(1, 10), rng, 0.35)
            perm = list(range(graph.n))
            rng.shuffle(perm)
            assert canonical_form(graph.relabel(perm)) == canonical_form(graph)

    @pytest.mark.canonical
    def test_every_permutation_of_a_small_graph(self, paw: Graph) -> None:
        """Test all 24 labelings of the paw."""
        forms = {canonical_form(paw.relabel(list(perm))) for perm in itertools.permutations(range(4))}
        assert forms == {canonical_form(paw)}

    @pytest.mark.canonical
    def test_separates_connected_graphs(self, connected_of_order) -> None:
        """Test that the 112 connected graphs on 6 vertices have distinct forms."""
        forms = {canonical_form(graph) for graph in connected_of_order(6)}
        assert len(forms) == 112

    @pytest.mark.canonical
    def test_agrees_with_networkx_isomorphism(self, rng, as_networkx) -> None:
        """Test form equality against networkx isomorphism on random pairs."""
        for _ in range(40):
            n = rng.randint(4, 7)
            a = random_connected_graph(n, rng, 0.3)
            b = random_connected_graph(n, rng, 0.3)
            same = nx.is_isomorphic(as_networkx(a), as_networkx(b))
            assert (canonical_form(a) == canonical_form(b)) == same

    @pytest.mark.canonical
    def test_form_decodes_to_isomorphic_graph(self) -> None:
        """Test that the form is the graph6 of a relabelled copy."""
        graph = cycle_graph(7)
        labeling = canonical_labeling(graph)
        assert decode_graph6(labeling.form) == graph.relabel(labeling.position)

    @pytest.mark.canonical
    @pytest.mark.negative
    def test_order_limit(self) -> None:
        """Test that graphs above the canonical order limit are rejected."""
        with pytest.raises(TooLarge):
            canonical_form(path_graph(17))


class TestAutomorphisms:
    """Test cases for automorphism generators found during the search."""

    @pytest.mark.canonical
    @pytest.mark.parametrize("graph", [hypercube(3), cycle_graph(8), path_graph(6)])
    def test_generators_are_automorphisms(self, graph: Graph) -> None:
        """
        Test that every generator maps the graph onto itself.

        Args:
            graph: Symmetric graph under test
        """
        labeling = canonical_labeling(graph)
        assert labeling.generators
        for perm in labeling.generators:
            assert graph.relabel(list(perm)) == graph

    @pytest.mark.canonical
    def test_order_is_a_permutation(self, petersen: Graph) -> None:
        """Test that the canonical order lists every vertex once."""
        labeling = canonical_labeling(petersen)
        assert sorted(labeling.order) == list(range(10))
        assert sorted(labeling.position) == list(range(10))
