"""
Helper utilities shared by the library, the harness and the CLI.
Provides shard parsing, interval formatting, chunking and report output.
"""

import csv
import io
import json
from itertools import islice
from pathlib import Path
from typing import Any, Iterable, Iterator, TypeVar
from slugify import slugify
from config.settings import REPORTS_DIR
from utils.logger import setup_logger

logger = setup_logger(__name__)

T = TypeVar("T")


def parse_shard(text: str) -> tuple[int, int]:
    """
    Parse a shard selector of the form "i/k".

    Args:
        text: Shard string (e.g., "0/4")

    Returns:
        Tuple (index, count) with 0 <= index < count

    Raises:
        ValueError: If the string is malformed or out of range
    """
    try:
        index_text, count_text = text.split("/")
        index, count = int(index_text), int(count_text)
    except ValueError:
        raise ValueError(f"Shard must look like i/k, got: {text!r}") from None
    if count < 1 or not 0 <= index < count:
        raise ValueError(f"Shard index out of range: {text!r}")
    return index, count


def format_interval(lo: int, hi: int) -> str:
    """
    Format a closed integer interval the way reports print it.

    Args:
        lo: Lower end
        hi: Upper end

    Returns:
        Interval string (e.g., "[13..23]")
    """
    return f"[{lo}..{hi}]"


def chunked(items: Iterable[T], size: int) -> Iterator[list[T]]:
    """
    Split an iterable into lists of at most `size` items.

    Args:
        items: Source iterable (consumed lazily)
        size: Maximum chunk length

    Yields:
        Consecutive chunks in source order
    """
    iterator = iter(items)
    while chunk := list(islice(iterator, size)):
        yield chunk


def dump_json(data: Any) -> str:
    """Serialize to JSON with sorted keys so identical data gives identical bytes."""
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def dump_csv(rows: list[dict[str, Any]]) -> str:
    """
    Render rows as CSV with a header taken from the first row.

    Args:
        rows: List of flat dictionaries sharing the same keys

    Returns:
        CSV text (empty string for no rows)
    """
    if not rows:
        return ""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def report_path(name: str, suffix: str = ".json") -> Path:
    """
    Build a report file path under the reports directory.

    Args:
        name: Task or suite name (slugified)
        suffix: File extension

    Returns:
        Path inside REPORTS_DIR
    """
    return REPORTS_DIR / f"{slugify(name)}{suffix}"


def save_report(name: str, data: Any) -> Path:
    """
    Write a JSON report to the reports directory.

    Args:
        name: Task or suite name
        data: JSON-serializable document

    Returns:
        Path of the written file
    """
    path = report_path(name)
    path.write_text(dump_json(data), encoding="utf-8")
    logger.info(f"Report saved: {path}")
    return path
