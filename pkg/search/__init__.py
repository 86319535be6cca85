"""
Search harness package.
Exports universes, predicates, tasks and reports.
"""

from search.universe import Universe
from search.predicates import HISTOGRAMS, PREDICATES, Facts, predicate_names
from search.report import Expectation, ExpectationResult, SearchReport, UniverseTally
from search.runner import SearchTask, registered_tasks, reproduce, run_search

__all__ = [
    "Universe",
    "HISTOGRAMS",
    "PREDICATES",
    "Facts",
    "predicate_names",
    "Expectation",
    "ExpectationResult",
    "SearchReport",
    "UniverseTally",
    "SearchTask",
    "registered_tasks",
    "reproduce",
    "run_search",
]
