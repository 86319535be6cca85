"""
Command-line entry point.

Per-graph commands (profile, classify, encode, decode) write JSON lines;
search, reproduce and verify write one JSON document. Exit codes:
0 success, 1 verification FAIL, 2 usage error, 3 input or decode error.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import IO, Any, Iterator, Optional

from config.settings import settings
from graphs.classify import classify
from graphs.codec import graph6_text, stream_graph6
from graphs.construct import build_from_spec
from graphs.errors import BadParameter, CodecError, GraphError, SearchAborted, UnknownTask
from graphs.graph import Graph
from graphs.invariants import profile
from search.runner import COLLECT_MODES, SearchTask, registered_tasks, reproduce, run_search
from suites.runner import SUITES, run_suites
from utils.helpers import dump_csv, dump_json, parse_shard, save_report
from utils.logger import setup_logger

logger = setup_logger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


def _shard(text: str) -> tuple[int, int]:
    try:
        return parse_shard(text)
    except ValueError as error:
        raise argparse.ArgumentTypeError(str(error)) from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


# ==================== Parser ====================


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wiener-ec",
        description="Wiener complexity versus eccentric complexity of graphs.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    graph_input = argparse.ArgumentParser(add_help=False)
    graph_input.add_argument("--family", help="Family spec such as z:3, qminus:4, bloom:cycle:5:2")
    graph_input.add_argument("--g6", metavar="FILE", help="graph6/sparse6 file ('-' for stdin)")
    graph_input.add_argument("source", nargs="?", choices=["-"], help="read graphs from stdin")
    graph_input.add_argument("--skip-invalid", action="store_true", help="skip corrupt records")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--out", metavar="FILE", help="write output here instead of stdout")

    report = argparse.ArgumentParser(add_help=False)
    report.add_argument("--csv", action="store_true", help="CSV summary to stdout")
    report.add_argument("--save", action="store_true", help="also save the JSON report under reports/")
    report.add_argument("--workers", type=_positive, default=None, help="worker processes")

    run = argparse.ArgumentParser(add_help=False)
    run.add_argument("--shard", type=_shard, default=(0, 1), help="universe shard i/k")
    run.add_argument("--extended", action="store_true", help="allow order-11 universes")
    run.add_argument("--timing", action="store_true", help="include wall time in the report")
    run.add_argument("--progress", action="store_true", help="progress bar on stderr")

    sub = commands.add_parser("profile", parents=[graph_input, output], help="invariant profiles")
    sub.add_argument("--vertices", action="store_true", help="include per-vertex tr and ec")
    sub.set_defaults(handler=cmd_profile)

    sub = commands.add_parser("classify", parents=[graph_input, output], help="class membership")
    sub.set_defaults(handler=cmd_classify)

    sub = commands.add_parser("construct", parents=[output], help="build a family graph")
    sub.add_argument("spec", help="family spec")
    sub.add_argument("--json", action="store_true", help="emit n, edges and graph6 as JSON")
    sub.set_defaults(handler=cmd_construct)

    sub = commands.add_parser("encode", parents=[output], help="JSON edge lists to graph6")
    sub.add_argument("input", nargs="?", default="-", help="JSON-lines file of {n, edges} ('-' for stdin)")
    sub.set_defaults(handler=cmd_encode)

    sub = commands.add_parser("decode", parents=[graph_input, output], help="graph6/sparse6 to JSON")
    sub.set_defaults(handler=cmd_decode)

    sub = commands.add_parser("search", parents=[output, report, run], help="run a search task")
    sub.add_argument("--universe", required=True, help="connected:N[-M], trees:N[-M] or g6:PATH")
    sub.add_argument("--pred", required=True, help="'+'-joined predicate names")
    sub.add_argument(
        "--collect",
        default="witnesses",
        help=f"comma-separated subset of {', '.join(COLLECT_MODES)}",
    )
    sub.add_argument("--histogram", action="append", default=[], help="histogram over matches")
    sub.add_argument("--name", default="search", help="task name in the report")
    sub.add_argument("--skip-invalid", action="store_true", help="skip corrupt graph6 records")
    sub.set_defaults(handler=cmd_search)

    sub = commands.add_parser("reproduce", parents=[output, report, run], help="run a registered task")
    sub.add_argument("task", nargs="?", help="registered task name")
    sub.add_argument("--list", action="store_true", help="list registered tasks")
    sub.add_argument("--g6", metavar="FILE", help="graph6 source replacing the built-in generator")
    sub.set_defaults(handler=cmd_reproduce)

    sub = commands.add_parser("verify", parents=[output, report], help="run verification suites")
    sub.add_argument("suites", nargs="*", default=["all"], help=f"all or any of: {', '.join(SUITES)}")
    sub.add_argument("--seed", type=int, default=None, help=f"sampling seed (default {settings.SEED})")
    sub.add_argument("--pair-budget", type=int, default=None, help="random pairs for product-identity")
    sub.add_argument("--max-order", type=int, default=None, help="factor order cap for product-identity")
    sub.add_argument("--tree-max-n", type=int, default=None, help="largest tree order for the tree suite")
    sub.add_argument("--diam2-max-n", type=int, default=None, help="largest order for the diam2 suite")
    sub.set_defaults(handler=cmd_verify)
    return parser


# ==================== Input / output ====================


@contextmanager
def _output(args: argparse.Namespace) -> Iterator[IO[str]]:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            yield handle
    else:
        yield sys.stdout


def _source_label(args: argparse.Namespace) -> str:
    if getattr(args, "family", None):
        return f"family {args.family}"
    path = getattr(args, "g6", None)
    return path if path and path != "-" else "<stdin>"


@contextmanager
def _input_graphs(args: argparse.Namespace) -> Iterator[Iterator[Graph]]:
    if args.family:
        yield iter([build_from_spec(args.family)])
        return
    path = args.g6 or "-"
    if path == "-":
        yield stream_graph6(sys.stdin.buffer, skip_invalid=args.skip_invalid)
        return
    with open(path, "rb") as handle:
        yield stream_graph6(handle, skip_invalid=args.skip_invalid)


def _check_single_input(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if not hasattr(args, "source"):
        return
    given = [option for option in (args.family, args.g6, args.source) if option is not None]
    if len(given) > 1:
        parser.error("give exactly one input: --family SPEC, --g6 FILE or -")


def _json_line(record: dict[str, Any]) -> str:
    return json.dumps(record, sort_keys=True) + "\n"


def _emit_report(args: argparse.Namespace, name: str, document: dict[str, Any], rows: list[dict]) -> None:
    text = dump_json(document)
    if args.save:
        save_report(name, document)
    if args.csv:
        sys.stdout.write(dump_csv(rows))
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
        return
    with _output(args) as out:
        out.write(text)


# ==================== Commands ====================


def cmd_profile(args: argparse.Namespace) -> int:
    with _input_graphs(args) as graphs, _output(args) as out:
        for graph in graphs:
            prof = profile(graph)
            record = prof.to_record(graph)
            if args.vertices:
                record["tr"] = list(prof.tr)
                record["ec"] = list(prof.ec)
            out.write(_json_line(record))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    with _input_graphs(args) as graphs, _output(args) as out:
        for graph in graphs:
            record = {"graph6": graph6_text(graph), **classify(graph).to_record()}
            out.write(_json_line(record))
    return EXIT_OK


def _graph_record(graph: Graph) -> dict[str, Any]:
    return {
        "graph6": graph6_text(graph),
        "n": graph.n,
        "edges": [list(edge) for edge in graph.edges()],
    }


def cmd_construct(args: argparse.Namespace) -> int:
    graph = build_from_spec(args.spec)
    with _output(args) as out:
        if args.json:
            out.write(_json_line({**_graph_record(graph), "label": graph.label}))
        else:
            out.write(graph6_text(graph) + "\n")
    return EXIT_OK


def cmd_encode(args: argparse.Namespace) -> int:
    handle = sys.stdin if args.input == "-" else open(args.input, encoding="utf-8")
    try:
        with _output(args) as out:
            for number, line in enumerate(handle, start=1):
                if not line.strip():
                    continue
                try:
                    record = json.loads(line)
                    graph = Graph.from_edges(record["n"], [tuple(edge) for edge in record["edges"]])
                except (json.JSONDecodeError, KeyError, TypeError) as error:
                    raise CodecError(f"not an {{n, edges}} record: {error}", number) from None
                except GraphError as error:
                    raise CodecError(str(error), number) from None
                out.write(graph6_text(graph) + "\n")
    finally:
        if handle is not sys.stdin:
            handle.close()
    return EXIT_OK


def cmd_decode(args: argparse.Namespace) -> int:
    with _input_graphs(args) as graphs, _output(args) as out:
        for graph in graphs:
            out.write(_json_line(_graph_record(graph)))
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    task = SearchTask(
        name=args.name,
        universe=args.universe,
        predicate=args.pred,
        collect=tuple(mode.strip() for mode in args.collect.split(",") if mode.strip()),
        histograms=tuple(args.histogram),
        shard=args.shard,
        extended=args.extended,
        skip_invalid=args.skip_invalid,
    )
    result = run_search(task, workers=args.workers, progress=args.progress or None)
    _emit_report(args, task.name, result.to_dict(include_timing=args.timing), result.summary_rows())
    return EXIT_OK


def cmd_reproduce(args: argparse.Namespace) -> int:
    if args.list:
        sys.stdout.write("\n".join(registered_tasks()) + "\n")
        return EXIT_OK
    if not args.task:
        raise BadParameter("reproduce needs a task name (or --list)")
    result = reproduce(
        args.task,
        workers=args.workers,
        extended=args.extended,
        source=args.g6,
        shard=args.shard,
        progress=args.progress or None,
    )
    rows = [{**row, "status": result.status or "N/A"} for row in result.summary_rows()]
    _emit_report(args, args.task, result.to_dict(include_timing=args.timing), rows)
    return EXIT_OK if result.passed else EXIT_FAIL


def _suite_options(args: argparse.Namespace) -> dict[str, dict[str, Any]]:
    options: dict[str, dict[str, Any]] = {}
    if args.pair_budget is not None:
        options.setdefault("product-identity", {})["pair_budget"] = args.pair_budget
    if args.max_order is not None:
        options.setdefault("product-identity", {})["max_order"] = args.max_order
    if args.tree_max_n is not None:
        options["tree"] = {"max_n": args.tree_max_n}
    if args.diam2_max_n is not None:
        options["diam2"] = {"max_n": args.diam2_max_n}
    return options


def cmd_verify(args: argparse.Namespace) -> int:
    seed = settings.SEED if args.seed is None else args.seed
    results = run_suites(args.suites, seed=seed, workers=args.workers, options=_suite_options(args))
    passed = all(result.passed for result in results)
    document = {
        "seed": seed,
        "status": "PASS" if passed else "FAIL",
        "suites": [result.to_dict() for result in results],
    }
    rows = [row for result in results for row in result.summary_rows()]
    _emit_report(args, "verify-" + "-".join(result.suite for result in results), document, rows)
    return EXIT_OK if passed else EXIT_FAIL


# ==================== Entry point ====================


def _diagnose(message: str) -> None:
    logger.debug(message)
    sys.stderr.write(f"error: {message}\n")


def main(argv: Optional[list[str]] = None) -> int:
    """
    Run one CLI command.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_single_input(parser, args)
    except SystemExit as exit_:
        return int(exit_.code or 0)

    try:
        return args.handler(args)
    except (BadParameter, UnknownTask) as error:
        _diagnose(str(error))
        return EXIT_USAGE
    except CodecError as error:
        _diagnose(f"{_source_label(args)}: {error}")
        return EXIT_INPUT
    except (GraphError, SearchAborted) as error:
        _diagnose(str(error))
        return EXIT_INPUT
    except OSError as error:
        _diagnose(f"{error.strerror or error}: {error.filename or _source_label(args)}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
