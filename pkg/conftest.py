"""
Pytest fixtures for the Wiener/eccentric complexity workbench.
Provides reusable fixtures for named graphs, the reference corpus and oracles.
"""

import random
from functools import lru_cache
from pathlib import Path
from typing import Callable, Generator

import networkx as nx
import pytest

from config.settings import settings
from graphs.construct import (
    complete_graph,
    corpus_graph,
    cycle_graph,
    paw_graph,
    path_graph,
    star_graph,
)
from graphs.enumeration import CONNECTED, TREES, GeneratorConfig, generate
from graphs.graph import Graph
from utils import DataLoader, setup_logger

logger = setup_logger(__name__)


# ==================== Named Graph Fixtures ====================


@pytest.fixture
def k1() -> Graph:
    """Single vertex."""
    return complete_graph(1)


@pytest.fixture
def k2() -> Graph:
    return complete_graph(2)


@pytest.fixture
def p3() -> Graph:
    return path_graph(3)


@pytest.fixture
def c4() -> Graph:
    return cycle_graph(4)


@pytest.fixture
def star3() -> Graph:
    return star_graph(3)


@pytest.fixture
def paw() -> Graph:
    return paw_graph()


@pytest.fixture
def petersen() -> Graph:
    """
    Provide the Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9.

    Returns:
        3-regular graph of order 10 and diameter 2
    """
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner, label="petersen")


# ==================== Reference Data Fixtures ====================


@pytest.fixture(scope="session")
def corpus_entries() -> list[dict]:
    """
    Provide the reference corpus entries.

    Returns:
        List of corpus dictionaries (edges, expected transmissions and scalars)
    """
    return DataLoader.get_corpus()


@pytest.fixture(scope="session")
def corpus() -> dict[str, Graph]:
    """
    Provide every corpus graph keyed by id.

    Returns:
        Dictionary id -> Graph
    """
    return {entry["id"]: corpus_graph(entry["id"]) for entry in DataLoader.get_corpus()}


@pytest.fixture(scope="session")
def known_counts() -> dict[str, list[int]]:
    """Published isomorphism-class counts; index 0 is order 1."""
    return DataLoader.get_known_counts()


# ==================== Exhaustive Corpus Fixtures ====================


@lru_cache(maxsize=None)
def _all_of_order(mode: str, n: int) -> tuple[Graph, ...]:
    logger.info(f"Generating {mode} of order {n}")
    return tuple(generate(GeneratorConfig(n, mode)))


@pytest.fixture(scope="session")
def connected_of_order() -> Callable[[int], tuple[Graph, ...]]:
    """
    Provide a cached lookup of all connected graphs of one order.

    Returns:
        Function n -> tuple of representatives
    """
    return lambda n: _all_of_order(CONNECTED, n)


@pytest.fixture(scope="session")
def trees_of_order() -> Callable[[int], tuple[Graph, ...]]:
    """Provide a cached lookup of all free trees of one order."""
    return lambda n: _all_of_order(TREES, n)


# ==================== Oracle Fixtures ====================


@pytest.fixture(scope="session")
def as_networkx() -> Callable[[Graph], nx.Graph]:
    """
    Provide a converter to networkx for independent cross-checks.

    Returns:
        Function Graph -> nx.Graph on nodes 0..n-1
    """

    def convert(graph: Graph) -> nx.Graph:
        result = nx.Graph()
        result.add_nodes_from(range(graph.n))
        result.add_edges_from(graph.edges())
        return result

    return convert


@pytest.fixture
def rng() -> random.Random:
    """Seeded random generator shared by sampled tests."""
    return random.Random(settings.SEED)


@pytest.fixture
def graph6_file(tmp_path: Path) -> Callable[..., Path]:
    """
    Provide a factory writing graph6 lines to a temporary file.

    Args:
        tmp_path: Pytest temporary directory

    Returns:
        Function (*lines, name="graphs.g6") -> Path
    """

    def write(*lines: str, name: str = "graphs.g6") -> Path:
        path = tmp_path / name
        path.write_text("".join(f"{line}\n" for line in lines), encoding="ascii")
        return path

    return write


# ==================== Utility Fixtures ====================


@pytest.fixture(autouse=True)
def test_setup_teardown(request: pytest.FixtureRequest) -> Generator:
    """
    Setup and teardown for each test.
    Logs test start and end.

    Args:
        request: Pytest fixture request object

    Yields:
        None
    """
    test_name = request.node.name
    logger.info(f"{'=' * 50}")
    logger.info(f"Starting test: {test_name}")
    logger.info(f"{'=' * 50}")

    yield

    if hasattr(request.node, "rep_call"):
        if request.node.rep_call.failed:
            logger.error(f"Test FAILED: {test_name}")
        else:
            logger.info(f"Test PASSED: {test_name}")
    else:
        logger.info(f"Test completed: {test_name}")


@pytest.hookimpl(tryfirst=True, hookwrapper=True)
def pytest_runtest_makereport(item: pytest.Item, call: pytest.CallInfo) -> Generator:
    """
    Hook to capture test results for use in fixtures.

    Args:
        item: Pytest test item
        call: Pytest call info

    Yields:
        None
    """
    outcome = yield
    rep = outcome.get_result()
    setattr(item, f"rep_{rep.when}", rep)
