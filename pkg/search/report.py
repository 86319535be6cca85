"""
Search results and their aggregation.

Tallies merge commutatively (counts add, histograms add, witnesses are the
smallest graph6 strings), so a report does not depend on worker count or on
the order in which shards finish.
"""

from __future__ import annotations

from collections import Counter
from typing import Any, Optional

from attrs import define, evolve, field, frozen

from config.settings import settings
from graphs.errors import BadParameter


@define
class UniverseTally:
    """
    Partial or complete counts for one sub-universe.

    Attributes:
        universe: Sub-universe label (e.g., "connected:9")
        examined: Graphs examined
        matches: Graphs satisfying the predicate
        witnesses: Smallest matching graph6 strings, sorted
        histograms: Histogram name -> key -> count over matches
        skipped: Corrupt records skipped in a g6 source
    """

    universe: str
    examined: int = 0
    matches: int = 0
    witnesses: list[str] = field(factory=list)
    histograms: dict[str, Counter] = field(factory=dict)
    skipped: int = 0

    def add_witness(self, graph6: str) -> None:
        self.witnesses.append(graph6)
        if len(self.witnesses) > 2 * settings.MAX_WITNESSES:
            self._trim()

    def _trim(self) -> None:
        self.witnesses = sorted(set(self.witnesses))[: settings.MAX_WITNESSES]

    def merge(self, other: UniverseTally) -> None:
        self.examined += other.examined
        self.matches += other.matches
        self.skipped += other.skipped
        self.witnesses.extend(other.witnesses)
        self._trim()
        for name, counts in other.histograms.items():
            self.histograms.setdefault(name, Counter()).update(counts)

    def finish(self) -> None:
        self._trim()

    def to_dict(self, collect_witnesses: bool) -> dict[str, Any]:
        data: dict[str, Any] = {
            "universe": self.universe,
            "examined": self.examined,
            "matches": self.matches,
        }
        if self.skipped:
            data["skipped"] = self.skipped
        if collect_witnesses:
            data["witnesses"] = list(self.witnesses)
            data["truncated"] = self.matches > len(self.witnesses)
        if self.histograms:
            data["histograms"] = {
                name: dict(sorted(counts.items())) for name, counts in self.histograms.items()
            }
        return data


OPS = {
    "eq": lambda observed, expected: observed == expected,
    "ge": lambda observed, expected: observed >= expected,
    "le": lambda observed, expected: observed <= expected,
}


@frozen
class Expectation:
    """
    One expected value from the reproduction registry.

    Field paths:
        matches / examined                    totals over all sub-universes
        tally:<universe>:matches|examined     one sub-universe
        histogram:<name>:<key>                summed histogram bucket (missing = 0)
    """

    field: str
    op: str
    value: int
    locus: str = ""

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Expectation:
        op = data.get("op", "eq")
        if op not in OPS:
            raise BadParameter(f"Unknown expectation operator: {op}")
        return cls(data["field"], op, int(data["value"]), data.get("locus", ""))

    def observe(self, report: SearchReport) -> int:
        kind, _, rest = self.field.partition(":")
        if kind in ("matches", "examined") and not rest:
            return getattr(report, kind)
        if kind == "tally":
            universe, _, attribute = rest.rpartition(":")
            for tally in report.tallies:
                if tally.universe == universe:
                    return getattr(tally, attribute)
            raise BadParameter(f"No tally for universe {universe!r}")
        if kind == "histogram":
            name, _, key = rest.partition(":")
            return report.histogram(name).get(key, 0)
        raise BadParameter(f"Unknown expectation field: {self.field}")

    def check(self, report: SearchReport) -> ExpectationResult:
        observed = self.observe(report)
        return ExpectationResult(
            field=self.field,
            op=self.op,
            expected=self.value,
            observed=observed,
            passed=OPS[self.op](observed, self.value),
            locus=self.locus,
        )


@frozen
class ExpectationResult:
    field: str
    op: str
    expected: int
    observed: int
    passed: bool
    locus: str

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict[str, Any]:
        return {
            "field": self.field,
            "op": self.op,
            "expected": self.expected,
            "observed": self.observed,
            "status": self.status,
            "locus": self.locus,
        }


@frozen
class SearchReport:
    """
    Aggregated result of a search task.

    Attributes:
        task: Task name
        universe: Universe description
        predicate: Predicate expression
        shard: "i/k" provenance
        tallies: Per sub-universe tallies in universe order
        collect_witnesses: Whether witness lists were collected
        wall_time: Seconds spent (excluded from JSON unless asked)
        expectations: Checked registry expectations (reproduce only)
        registry_version: Version of the registry the expectations came from
    """

    task: str
    universe: str
    predicate: str
    shard: str
    tallies: tuple[UniverseTally, ...]
    collect_witnesses: bool
    wall_time: float = 0.0
    expectations: tuple[ExpectationResult, ...] = ()
    registry_version: Optional[str] = None

    @property
    def examined(self) -> int:
        return sum(tally.examined for tally in self.tallies)

    @property
    def matches(self) -> int:
        return sum(tally.matches for tally in self.tallies)

    @property
    def skipped(self) -> int:
        return sum(tally.skipped for tally in self.tallies)

    @property
    def witnesses(self) -> list[str]:
        merged = sorted(w for tally in self.tallies for w in tally.witnesses)
        return merged[: settings.MAX_WITNESSES]

    def histogram(self, name: str) -> dict[str, int]:
        total: Counter = Counter()
        for tally in self.tallies:
            total.update(tally.histograms.get(name, {}))
        return dict(sorted(total.items()))

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.expectations)

    @property
    def status(self) -> Optional[str]:
        if not self.expectations:
            return None
        return "PASS" if self.passed else "FAIL"

    def with_expectations(
        self, expectations: list[Expectation], version: Optional[str]
    ) -> SearchReport:
        results = tuple(expectation.check(self) for expectation in expectations)
        return evolve(self, expectations=results, registry_version=version)

    def to_dict(self, include_timing: bool = False) -> dict[str, Any]:
        """JSON document; identical runs give identical documents unless timing is included."""
        data: dict[str, Any] = {
            "task": self.task,
            "universe": self.universe,
            "predicate": self.predicate,
            "shard": self.shard,
            "examined": self.examined,
            "matches": self.matches,
            "tallies": [tally.to_dict(self.collect_witnesses) for tally in self.tallies],
        }
        if self.collect_witnesses:
            data["witnesses"] = self.witnesses
            data["truncated"] = self.matches > len(self.witnesses)
        if self.skipped:
            data["skipped"] = self.skipped
        if self.expectations:
            data["expectations"] = [result.to_dict() for result in self.expectations]
            data["status"] = self.status
            data["registry_version"] = self.registry_version
        if include_timing:
            data["wall_time"] = round(self.wall_time, 3)
        return data

    def summary_rows(self) -> list[dict[str, Any]]:
        """Flat rows for the CSV summary."""
        return [
            {
                "task": self.task,
                "universe": tally.universe,
                "predicate": self.predicate,
                "examined": tally.examined,
                "matches": tally.matches,
            }
            for tally in self.tallies
        ]
