"""
Base Suite class providing common functionality for all verification suites.
A suite instantiates claims on concrete graphs and records PASS/FAIL per claim.
"""

from __future__ import annotations

import random
from typing import Any, Callable, Optional

from attrs import define, field, frozen

from config.settings import settings
from graphs.codec import graph6_text
from graphs.graph import Graph
from graphs.invariants import InvariantProfile, profile
from utils.logger import setup_logger

logger = setup_logger(__name__)

Claim = tuple[str, str]


@frozen
class ClaimCheck:
    """
    Outcome of one claim over every instance a suite tried.

    Attributes:
        claim: Claim identifier
        locus: Human-readable statement being checked
        instances: Instances on which the claim was evaluated
        skipped: Instances whose hypothesis did not hold
        status: "PASS" or "FAIL"
        witness: First counterexample (always present on FAIL)
    """

    claim: str
    locus: str
    instances: int
    skipped: int
    status: str
    witness: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == "PASS"

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "claim": self.claim,
            "locus": self.locus,
            "instances": self.instances,
            "status": self.status,
        }
        if self.skipped:
            data["skipped"] = self.skipped
        if self.witness is not None:
            data["witness"] = self.witness
        return data


@frozen
class SuiteResult:
    """
    Checks of one suite, ordered by claim id.

    Attributes:
        suite: Suite name
        seed: Seed of the sampled instances
        checks: ClaimCheck per claim, sorted by claim id
    """

    suite: str
    seed: int
    checks: tuple[ClaimCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    @property
    def failures(self) -> list[ClaimCheck]:
        return [check for check in self.checks if not check.passed]

    def check(self, claim: str) -> ClaimCheck:
        """
        Look up a claim by id.

        Raises:
            KeyError: If the suite has no such claim
        """
        for check in self.checks:
            if check.claim == claim:
                return check
        raise KeyError(f"Suite {self.suite} has no claim {claim!r}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "status": self.status,
            "checks": [check.to_dict() for check in self.checks],
        }

    def summary_rows(self) -> list[dict[str, Any]]:
        return [
            {
                "suite": self.suite,
                "claim": check.claim,
                "instances": check.instances,
                "skipped": check.skipped,
                "status": check.status,
            }
            for check in self.checks
        ]


@define
class _Tally:
    locus: str
    instances: int = 0
    skipped: int = 0
    witness: Optional[str] = field(default=None)


class BaseSuite:
    """
    Base class for all verification suites.

    Subclasses implement run() by calling expect(), expect_equal() and skip()
    for every instance; the base class keeps the per-claim tallies and turns
    them into a SuiteResult.
    """

    name = "base"

    def __init__(self, seed: Optional[int] = None) -> None:
        """
        Initialize the base suite.

        Args:
            seed: Seed for sampled instances (defaults to settings.SEED)
        """
        self.seed = settings.SEED if seed is None else seed
        self.rng = random.Random(self.seed)
        self._tallies: dict[str, _Tally] = {}
        self._profiles: dict[Graph, InvariantProfile] = {}

    def run(self) -> None:
        raise NotImplementedError

    # Profile helpers
    def profile(self, graph: Graph) -> InvariantProfile:
        """Memoized invariant profile (graphs are reused across claims)."""
        cached = self._profiles.get(graph)
        if cached is None:
            cached = profile(graph)
            self._profiles[graph] = cached
        return cached

    @staticmethod
    def describe(*graphs: Graph) -> str:
        """Witness text: label and graph6 of every graph involved."""
        return " ; ".join(f"{g.label or 'graph'}={graph6_text(g)}" for g in graphs)

    # Recording methods
    def _tally(self, claim: Claim) -> _Tally:
        claim_id, locus = claim
        if claim_id not in self._tallies:
            self._tallies[claim_id] = _Tally(locus)
        return self._tallies[claim_id]

    def expect(self, claim: Claim, condition: bool, witness: Callable[[], str] | str) -> bool:
        """
        Record one instance of a claim.

        Args:
            claim: (claim id, locus) pair
            condition: Whether the instance satisfies the claim
            witness: Witness text, or a callable producing it on failure

        Returns:
            The condition, for chaining
        """
        tally = self._tally(claim)
        tally.instances += 1
        if not condition and tally.witness is None:
            tally.witness = witness() if callable(witness) else witness
            logger.error(f"[{self.name}] {claim[0]} failed on {tally.witness}")
        return condition

    def expect_equal(
        self, claim: Claim, observed: Any, expected: Any, witness: Callable[[], str] | str
    ) -> bool:
        """Record an equality instance; the witness names both values on failure."""
        if observed == expected:
            return self.expect(claim, True, "")

        def detail() -> str:
            base = witness() if callable(witness) else witness
            return f"{base} (observed {observed}, expected {expected})"

        return self.expect(claim, False, detail)

    def skip(self, claim: Claim, reason: str) -> None:
        """Count an instance whose hypothesis does not hold."""
        self._tally(claim).skipped += 1
        logger.debug(f"[{self.name}] {claim[0]} skipped: {reason}")

    def declare(self, *claims: Claim) -> None:
        """Register claims up front so they are reported even with no instance."""
        for claim in claims:
            self._tally(claim)

    # Result
    def result(self) -> SuiteResult:
        checks = []
        for claim_id in sorted(self._tallies):
            tally = self._tallies[claim_id]
            status = "FAIL" if tally.witness is not None else "PASS"
            checks.append(
                ClaimCheck(
                    claim=claim_id,
                    locus=tally.locus,
                    instances=tally.instances,
                    skipped=tally.skipped,
                    status=status,
                    witness=tally.witness,
                )
            )
        return SuiteResult(self.name, self.seed, tuple(checks))

    def execute(self) -> SuiteResult:
        """Run the suite and log its summary."""
        logger.info(f"Running suite {self.name} (seed={self.seed})")
        self.run()
        result = self.result()
        for check in result.checks:
            if check.skipped:
                logger.warning(
                    f"[{self.name}] {check.claim}: {check.skipped} instance(s) skipped, hypothesis not met"
                )
        logger.info(
            f"Suite {self.name}: {result.status} "
            f"({len(result.checks) - len(result.failures)}/{len(result.checks)} claims)"
        )
        return result
