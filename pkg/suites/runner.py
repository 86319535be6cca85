"""
Suite registry and parallel suite runner.
"""

from __future__ import annotations

from multiprocessing import Pool
from typing import Any, Callable, Optional

from config.settings import settings
from graphs.errors import BadParameter
from suites.base_suite import SuiteResult
from suites.diam2_suite import diam2_suite
from suites.family_suite import family_suite
from suites.product_suites import product_equality_suite, product_identity_suite
from suites.tree_suite import tree_suite
from utils.logger import setup_logger

logger = setup_logger(__name__)

SUITES: dict[str, Callable[..., SuiteResult]] = {
    "product-identity": product_identity_suite,
    "product-equality": product_equality_suite,
    "tree": tree_suite,
    "diam2": diam2_suite,
    "family": family_suite,
}


def resolve_suites(names: list[str]) -> list[str]:
    """
    Expand "all" and validate suite names, keeping registry order.

    Raises:
        BadParameter: If a name is not registered
    """
    if not names or "all" in names:
        return list(SUITES)
    for name in names:
        if name not in SUITES:
            raise BadParameter(f"Unknown suite {name!r}; known: all, {', '.join(SUITES)}")
    return [name for name in SUITES if name in names]


def _run_one(job: tuple[str, Optional[int], dict[str, Any]]) -> SuiteResult:
    name, seed, options = job
    return SUITES[name](seed=seed, **options)


def run_suites(
    names: list[str],
    seed: Optional[int] = None,
    workers: Optional[int] = None,
    options: Optional[dict[str, dict[str, Any]]] = None,
) -> list[SuiteResult]:
    """
    Run verification suites, in parallel when more than one worker is allowed.

    Args:
        names: Suite names or ["all"]
        seed: Seed for sampled instances (defaults to settings.SEED)
        workers: Worker processes; 1 runs in-process
        options: Per-suite keyword overrides, e.g. {"tree": {"max_n": 10}}

    Returns:
        One SuiteResult per suite in registry order
    """
    selected = resolve_suites(names)
    seed = settings.SEED if seed is None else seed
    options = options or {}
    jobs = [(name, seed, options.get(name, {})) for name in selected]
    workers = min(workers or settings.WORKERS, len(jobs))

    if workers <= 1:
        results = [_run_one(job) for job in jobs]
    else:
        with Pool(processes=workers) as pool:
            results = list(pool.imap_unordered(_run_one, jobs))

    by_name = {result.suite: result for result in results}
    ordered = [by_name[name] for name in selected]
    failed = [result.suite for result in ordered if not result.passed]
    if failed:
        logger.error(f"Suites with failing claims: {', '.join(failed)}")
    else:
        logger.info(f"All {len(ordered)} suite(s) passed")
    return ordered
