"""
Search pipeline: producer -> worker pool -> commutative aggregation.

Generator universes are split into sub-shards (sub-shard j of user shard i/k
is shard i + k*j of k*parts); graph6 sources are split into line chunks.
Each work unit returns a UniverseTally and tallies are merged as they arrive.
"""

from __future__ import annotations

import time
from collections import Counter
from multiprocessing import Pool
from typing import Any, Iterator, Optional

from attrs import evolve, field, frozen
from tqdm import tqdm

from config.settings import settings
from graphs.codec import stream_graph6
from graphs.enumeration import GeneratorConfig, generate
from graphs.errors import BadParameter, CodecError, SearchAborted, UnknownTask
from search.predicates import HISTOGRAMS, Facts, check_histograms, evaluate, predicate_names
from search.report import Expectation, SearchReport, UniverseTally
from search.universe import Universe
from utils.data_loader import DataLoader
from utils.helpers import chunked
from utils.logger import setup_logger

logger = setup_logger(__name__)

COLLECT_MODES = ("count_only", "witnesses", "histogram")


@frozen
class SearchTask:
    """
    Attributes:
        name: Task identifier
        universe: Universe string (see search.universe)
        predicate: "+"-joined predicate names
        collect: Any of count_only, witnesses, histogram
        histograms: Histogram names filled over matching graphs
        shard: (index, count) restriction of the universe
        extended: Allow order-11 generator universes
        skip_invalid: Skip corrupt graph6 records instead of aborting
    """

    name: str
    universe: str
    predicate: str
    collect: tuple[str, ...] = ("witnesses",)
    histograms: tuple[str, ...] = ()
    shard: tuple[int, int] = field(default=(0, 1))
    extended: bool = False
    skip_invalid: bool = False

    def __attrs_post_init__(self) -> None:
        for mode in self.collect:
            if mode not in COLLECT_MODES:
                raise BadParameter(f"Unknown collect mode: {mode}")
        predicate_names(self.predicate)
        check_histograms(self.histograms)
        Universe.parse(self.universe)

    @property
    def collect_witnesses(self) -> bool:
        return "witnesses" in self.collect


@frozen
class WorkUnit:
    label: str
    predicate: tuple[str, ...]
    histograms: tuple[str, ...]
    collect_witnesses: bool
    config: Optional[GeneratorConfig] = None
    lines: tuple[bytes, ...] = ()
    first_line: int = 1
    skip_invalid: bool = False


def _evaluate(unit: WorkUnit) -> UniverseTally:
    """Examine every graph of one work unit."""
    tally = UniverseTally(unit.label)
    diagnostics: list[CodecError] = []
    if unit.config is not None:
        graphs = generate(unit.config)
    else:
        graphs = stream_graph6(
            unit.lines,
            skip_invalid=unit.skip_invalid,
            diagnostics=diagnostics,
            first_line=unit.first_line,
        )

    for graph in graphs:
        tally.examined += 1
        facts = Facts(graph)
        try:
            if not evaluate(unit.predicate, facts):
                continue
            keys = {name: HISTOGRAMS[name](facts) for name in unit.histograms}
        except Exception as error:
            raise SearchAborted(f"{type(error).__name__}: {error}", facts.graph6) from error
        tally.matches += 1
        if unit.collect_witnesses:
            tally.add_witness(facts.graph6)
        for name, key in keys.items():
            tally.histograms.setdefault(name, Counter())[key] += 1

    tally.skipped = len(diagnostics)
    tally.finish()
    return tally


def _units(task: SearchTask, universe: Universe, parts: int) -> Iterator[WorkUnit]:
    names = predicate_names(task.predicate)
    common = dict(
        predicate=names,
        histograms=task.histograms,
        collect_witnesses=task.collect_witnesses,
    )
    if universe.kind != "g6":
        index, count = task.shard
        for label, config in universe.configs(task.shard, task.extended):
            for j in range(parts):
                sub = evolve(config, shard=(index + count * j, count * parts))
                yield WorkUnit(label=label, config=sub, **common)
        return

    label = universe.labels[0]
    index, count = task.shard
    with open(universe.path, "rb") as source:
        for position, lines in enumerate(chunked(source, settings.CHUNK_SIZE)):
            if position % count != index:
                continue
            yield WorkUnit(
                label=label,
                lines=tuple(lines),
                first_line=position * settings.CHUNK_SIZE + 1,
                skip_invalid=task.skip_invalid,
                **common,
            )


def run_search(
    task: SearchTask, workers: Optional[int] = None, progress: Optional[bool] = None
) -> SearchReport:
    """
    Examine every graph of the task's universe exactly once.

    Args:
        task: Search task
        workers: Worker processes; 1 runs sequentially in-process
        progress: Show a tqdm progress bar on stderr

    Returns:
        SearchReport independent of worker count and completion order

    Raises:
        SearchAborted: If a predicate raises on some graph
        CodecError: If a graph6 source is corrupt and skipping is off
    """
    workers = workers or settings.WORKERS
    if workers < 1:
        raise BadParameter(f"workers must be >= 1, got {workers}")
    progress = settings.SHOW_PROGRESS if progress is None else progress
    universe = Universe.parse(task.universe)
    logger.info(
        f"Search {task.name}: {task.universe} pred={task.predicate} workers={workers}"
    )

    started = time.perf_counter()
    tallies = {label: UniverseTally(label) for label in universe.labels}
    parts = 1 if workers == 1 else workers * 4
    units = _units(task, universe, parts)
    bar = tqdm(desc=task.name, unit="unit", disable=not progress)
    if workers == 1:
        results = map(_evaluate, units)
        for tally in results:
            tallies[tally.universe].merge(tally)
            bar.update()
    else:
        with Pool(processes=workers) as pool:
            for tally in pool.imap_unordered(_evaluate, units):
                tallies[tally.universe].merge(tally)
                bar.update()
    bar.close()

    for tally in tallies.values():
        tally.finish()
        logger.info(f"{tally.universe}: examined={tally.examined} matches={tally.matches}")
    return SearchReport(
        task=task.name,
        universe=universe.describe(),
        predicate=task.predicate,
        shard=f"{task.shard[0]}/{task.shard[1]}",
        tallies=tuple(tallies[label] for label in universe.labels),
        collect_witnesses=task.collect_witnesses,
        wall_time=time.perf_counter() - started,
    )


def registered_tasks() -> list[str]:
    return [entry["name"] for entry in DataLoader.get_tasks()]


def _registry_entry(name: str) -> tuple[dict[str, Any], Optional[str]]:
    registry = DataLoader.get_registry()
    for entry in registry.get("tasks", []):
        if entry["name"] == name:
            return entry, registry.get("version")
    raise UnknownTask(f"Unknown task {name!r}; registered: {', '.join(registered_tasks())}")


def reproduce(
    name: str,
    workers: Optional[int] = None,
    extended: bool = False,
    source: Optional[str] = None,
    shard: tuple[int, int] = (0, 1),
    progress: Optional[bool] = None,
) -> SearchReport:
    """
    Run a registered task and check its expected values.

    Args:
        name: Registry task name
        workers: Worker processes
        extended: Allow order-11 generator universes
        source: graph6 file replacing the built-in generator universe
        shard: Universe shard; expected values are checked only for 0/1
        progress: Show a progress bar

    Returns:
        SearchReport with PASS/FAIL per expectation (none for a partial shard)

    Raises:
        UnknownTask: If the name is not registered
        BadParameter: If an extended task is run without the extended flag or a source
    """
    entry, version = _registry_entry(name)
    extended = extended or settings.EXTENDED
    if entry.get("extended") and not extended and source is None:
        raise BadParameter(f"Task {name} is extended; enable extended runs or give a graph6 source")

    task = SearchTask(
        name=name,
        universe=f"g6:{source}" if source else entry["universe"],
        predicate=entry["predicate"],
        collect=tuple(entry.get("collect", ["witnesses"])),
        histograms=tuple(entry.get("histograms", [])),
        shard=shard,
        extended=extended,
    )
    report = run_search(task, workers, progress)
    if shard != (0, 1):
        logger.warning(
            f"{name}: shard {shard[0]}/{shard[1]} covers part of the universe, expected values not checked"
        )
        return report
    expectations = [Expectation.from_dict(data) for data in entry.get("expectations", [])]
    report = report.with_expectations(expectations, version)
    for result in report.expectations:
        message = (
            f"{name} {result.field}: observed {result.observed} "
            f"{result.op} expected {result.expected} -> {result.status} ({result.locus})"
        )
        if result.passed:
            logger.info(message)
        else:
            logger.error(message)
    return report
