"""
Search harness tests.
Tests cover universes, predicates, aggregation, graph6 sources and the reproduction registry.
"""

import json

import pytest

from config.settings import settings
from graphs.errors import BadParameter, CodecError, SearchAborted, UnknownTask
from search.predicates import PREDICATES, Facts, predicate_names
from search.report import Expectation, SearchReport, UniverseTally
from search.runner import SearchTask, registered_tasks, reproduce, run_search
from search.universe import Universe
from utils import DataLoader
from utils.helpers import dump_json


def search(universe: str, predicate: str = "any", workers: int = 1, **kwargs) -> SearchReport:
    task = SearchTask(name="test", universe=universe, predicate=predicate, **kwargs)
    return run_search(task, workers=workers, progress=False)


class TestUniverse:
    """Test cases for universe strings."""

    @pytest.mark.search
    def test_ranges(self) -> None:
        """Test order ranges and their tally labels."""
        universe = Universe.parse("connected:7-9")
        assert universe.orders == (7, 8, 9)
        assert universe.labels == ["connected:7", "connected:8", "connected:9"]
        assert universe.describe() == "connected:7-9"
        assert Universe.parse("trees:12").labels == ["trees:12"]

    @pytest.mark.search
    def test_graph6_source(self) -> None:
        """Test a file universe."""
        universe = Universe.parse("g6:data/some.g6")
        assert universe.kind == "g6"
        assert universe.labels == ["g6:some.g6"]

    @pytest.mark.search
    @pytest.mark.negative
    @pytest.mark.parametrize("text", ["connected", "connected:x", "connected:5-3", "cubic:4", "g6:", "trees:0"])
    def test_malformed(self, text: str) -> None:
        """
        Test rejected universe strings.

        Args:
            text: Malformed universe
        """
        with pytest.raises(BadParameter):
            Universe.parse(text)


class TestPredicates:
    """Test cases for named predicates."""

    @pytest.mark.search
    def test_composition(self) -> None:
        """Test '+'-joined predicate expressions."""
        assert predicate_names("interval-irregular+biconnected") == ("interval-irregular", "biconnected")

    @pytest.mark.search
    @pytest.mark.negative
    @pytest.mark.parametrize("expression", ["", "nonsense", "tree+nonsense"])
    def test_unknown(self, expression: str) -> None:
        """
        Test rejected predicate expressions.

        Args:
            expression: Invalid expression
        """
        with pytest.raises(BadParameter):
            predicate_names(expression)

    @pytest.mark.search
    def test_facts_on_corpus(self, corpus) -> None:
        """Test predicates on graphs with known classes."""
        facts = Facts(corpus["interval-7"])
        assert PREDICATES["interval-irregular"](facts)
        assert not PREDICATES["indivisible-not-interval"](facts)
        assert PREDICATES["w-exceeds-ec"](facts)
        assert PREDICATES["indivisible-not-interval"](Facts(corpus["indivisible-11"]))
        assert PREDICATES["tree"](Facts(corpus["irregular-tree-7"]))
        assert PREDICATES["biconnected"](Facts(corpus["two-level-6"]))


class TestRunSearch:
    """Test cases for the search pipeline."""

    @pytest.mark.smoke
    @pytest.mark.search
    def test_examines_every_class(self, known_counts) -> None:
        """Test that 'any' matches exactly the published counts."""
        report = search("connected:1-6")
        counts = known_counts["connected_graphs"]
        assert [tally.examined for tally in report.tallies] == counts[:6]
        assert report.matches == report.examined == sum(counts[:6])

    @pytest.mark.search
    def test_histogram(self) -> None:
        """Test the diameter histogram over connected graphs of orders 1..4."""
        report = search("connected:1-4", collect=("count_only",), histograms=("diam",))
        assert report.histogram("diam") == {"0": 1, "1": 3, "2": 5, "3": 1}
        assert "witnesses" not in report.to_dict()

    @pytest.mark.search
    def test_witnesses_are_sorted(self) -> None:
        """Test that witnesses are the sorted graph6 strings of matches."""
        report = search("connected:4", "self-centered")
        assert report.witnesses == sorted(report.witnesses)
        assert len(report.witnesses) == 2
        assert "C~" in report.witnesses

    @pytest.mark.search
    @pytest.mark.parametrize(
        "universe",
        ["connected:5-6", pytest.param("connected:8", marks=pytest.mark.slow)],
    )
    def test_worker_count_does_not_change_report(self, universe: str) -> None:
        """
        Test that sequential and parallel runs give byte-identical documents.

        Args:
            universe: Universe string to search
        """
        sequential = search(universe, "arithmetic", workers=1, histograms=("c_w",))
        parallel = search(universe, "arithmetic", workers=4, histograms=("c_w",))
        assert dump_json(sequential.to_dict()) == dump_json(parallel.to_dict())

    @pytest.mark.search
    def test_shards_sum_to_whole(self) -> None:
        """Test that per-shard counts add up to the full search."""
        whole = search("connected:6", "transmission-irregular")
        parts = [search("connected:6", "transmission-irregular", shard=(i, 3)) for i in range(3)]
        assert sum(part.matches for part in parts) == whole.matches
        assert sorted(w for part in parts for w in part.witnesses) == whole.witnesses

    @pytest.mark.search
    def test_report_is_deterministic_json(self) -> None:
        """Test that the JSON document omits timing unless asked."""
        report = search("trees:8", "center-regular-tree")
        document = report.to_dict()
        assert "wall_time" not in document
        assert "wall_time" in report.to_dict(include_timing=True)
        again = search("trees:8", "center-regular-tree").to_dict()
        assert json.dumps(document, sort_keys=True) == json.dumps(again, sort_keys=True)


class TestGraph6Universe:
    """Test cases for searching graph6 files."""

    @pytest.mark.search
    def test_counts(self, graph6_file) -> None:
        """Test a small file with a header."""
        path = graph6_file(">>graph6<<A_", "Bw", "Bg", "C~")
        report = search(f"g6:{path}", "diam2")
        assert report.examined == 4
        assert report.witnesses == ["Bg"]

    @pytest.mark.search
    @pytest.mark.negative
    def test_corrupt_record_aborts(self, graph6_file) -> None:
        """Test that a corrupt record aborts with its line number."""
        path = graph6_file("A_", "Bw", "B")
        with pytest.raises(CodecError) as error:
            search(f"g6:{path}")
        assert error.value.line == 3

    @pytest.mark.search
    @pytest.mark.negative
    def test_skip_invalid(self, graph6_file) -> None:
        """Test that skipped records are counted."""
        path = graph6_file("A_", "A`", "Bw", "B ")
        report = search(f"g6:{path}", skip_invalid=True)
        assert report.examined == 2
        assert report.skipped == 2
        assert report.to_dict()["skipped"] == 2

    @pytest.mark.search
    @pytest.mark.negative
    def test_predicate_error_names_the_graph(self, graph6_file) -> None:
        """Test that a predicate failure aborts with the offending graph."""
        path = graph6_file("A_", "A?")
        with pytest.raises(SearchAborted) as error:
            search(f"g6:{path}", "diam2")
        assert error.value.graph6 == "A?"

    @pytest.mark.search
    @pytest.mark.negative
    def test_missing_file(self, tmp_path) -> None:
        """Test that a missing source raises."""
        with pytest.raises(FileNotFoundError):
            search(f"g6:{tmp_path / 'missing.g6'}")


class TestExpectations:
    """Test cases for expectation checking."""

    @pytest.mark.search
    def test_fields(self) -> None:
        """Test every kind of field path against a hand-built report."""
        tally = UniverseTally("connected:7", examined=853, matches=1)
        tally.histograms["tr-interval"] = {"[7..13]": 1}
        report = SearchReport("t", "connected:7", "interval-irregular", "0/1", (tally,), True)
        checks = [
            Expectation("matches", "eq", 1),
            Expectation("examined", "ge", 800),
            Expectation("tally:connected:7:matches", "le", 1),
            Expectation("histogram:tr-interval:[7..13]", "eq", 1),
            Expectation("histogram:tr-interval:[8..15]", "eq", 0),
        ]
        checked = report.with_expectations(checks, "1.0")
        assert checked.passed
        assert checked.status == "PASS"
        assert checked.to_dict()["registry_version"] == "1.0"

    @pytest.mark.search
    @pytest.mark.negative
    def test_failure_is_reported(self) -> None:
        """Test that a failed expectation turns the report status to FAIL."""
        report = SearchReport("t", "trees:4", "any", "0/1", (UniverseTally("trees:4", 2, 2),), False)
        checked = report.with_expectations([Expectation("matches", "eq", 3, "locus")], None)
        assert checked.status == "FAIL"
        assert checked.expectations[0].observed == 2

    @pytest.mark.search
    @pytest.mark.negative
    def test_unknown_operator(self) -> None:
        """Test that registry entries with unknown operators are rejected."""
        with pytest.raises(BadParameter):
            Expectation.from_dict({"field": "matches", "op": "ne", "value": 1})


class TestRegistry:
    """Test cases for registered reproduction tasks."""

    @pytest.mark.search
    def test_registry_entries_are_valid(self) -> None:
        """Test that every registered task parses."""
        assert "interval-counts" in registered_tasks()
        for entry in DataLoader.get_tasks():
            SearchTask(
                name=entry["name"],
                universe=entry["universe"],
                predicate=entry["predicate"],
                collect=tuple(entry.get("collect", ["witnesses"])),
                histograms=tuple(entry.get("histograms", [])),
                extended=True,
            )
            for data in entry["expectations"]:
                Expectation.from_dict(data)

    @pytest.mark.smoke
    @pytest.mark.search
    def test_irregular_trees(self) -> None:
        """Test the quick tree task end to end."""
        report = reproduce("irregular-trees-7", workers=1, progress=False)
        assert report.status == "PASS"
        assert report.examined == 11

    @pytest.mark.search
    def test_partial_shard_skips_expectations(self) -> None:
        """Test that a partial shard reports counts without verdicts."""
        report = reproduce("irregular-trees-7", shard=(0, 2), workers=1, progress=False)
        assert report.expectations == ()
        assert report.status is None
        assert report.passed
        assert "status" not in report.to_dict()
        assert report.examined < 11

    @pytest.mark.search
    def test_interval_histogram_is_exact(self) -> None:
        """Test that the order-11 interval breakdown is checked for equality."""
        (entry,) = [entry for entry in DataLoader.get_tasks() if entry["name"] == "interval-11-2conn"]
        ops = {data["field"]: data["op"] for data in entry["expectations"]}
        assert ops.pop("matches") == "ge"
        assert ops == {
            "histogram:tr-interval:[13..23]": "eq",
            "histogram:tr-interval:[15..25]": "eq",
            "histogram:tr-interval:[17..27]": "eq",
        }

    @pytest.mark.search
    @pytest.mark.slow
    def test_interval_small(self) -> None:
        """Test the interval irregular counts for orders 7 and 8."""
        report = reproduce("interval-small", progress=False)
        assert report.status == "PASS"
        assert report.histogram("tr-interval")["[7..13]"] == 1

    @pytest.mark.search
    @pytest.mark.slow
    def test_interval_counts(self) -> None:
        """Test the interval irregular counts for orders 7 through 10."""
        assert reproduce("interval-counts", progress=False).passed

    @pytest.mark.search
    @pytest.mark.slow
    def test_diameter_three_gap(self) -> None:
        """Test that no diameter-3 graph up to order 10 has C_ec > C_W."""
        assert reproduce("diam3-gap", progress=False).passed

    @pytest.mark.search
    @pytest.mark.extended
    def test_indivisible_eleven(self) -> None:
        """Test the order-11 indivisible counts."""
        assert reproduce("indivisible-11", extended=True, progress=False).passed

    @pytest.mark.search
    @pytest.mark.negative
    def test_unknown_task(self) -> None:
        """Test that unregistered names raise UnknownTask."""
        with pytest.raises(UnknownTask):
            reproduce("no-such-task")

    @pytest.mark.search
    @pytest.mark.negative
    def test_extended_task_needs_flag(self, monkeypatch) -> None:
        """Test that order-11 tasks refuse to run without the extended flag."""
        monkeypatch.setattr(settings, "EXTENDED", False)
        with pytest.raises(BadParameter):
            reproduce("indivisible-11")
