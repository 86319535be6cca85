"""
graph6 reader/writer and sparse6 reader.

Both formats pack bits six at a time into printable bytes 63..126. graph6
stores the upper triangle of the adjacency matrix column by column:
x(0,1), x(0,2), x(1,2), x(0,3), ... ; sparse6 stores an edge list as
(b, x) records of 1 + k bits.
"""

from typing import IO, Iterable, Iterator, Optional, Union

from graphs.errors import (
    CodecError,
    GraphError,
    InvalidByte,
    InvalidPadding,
    SelfLoop,
    TruncatedRecord,
)
from graphs.graph import Graph
from utils.logger import setup_logger

logger = setup_logger(__name__)

GRAPH6_HEADER = b">>graph6<<"
SPARSE6_HEADER = b">>sparse6<<"

Line = Union[bytes, str]


def _as_bytes(line: Line) -> bytes:
    if isinstance(line, str):
        try:
            line = line.encode("ascii")
        except UnicodeEncodeError as error:
            char = line[error.start]
            raise InvalidByte(
                f"Character {char!r} at offset {error.start} outside 63..126"
            ) from None
    return line.rstrip(b"\r\n")


def _check_bytes(data: bytes) -> None:
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise InvalidByte(f"Byte {byte} at offset {pos} outside 63..126")


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return (n, offset of the first body byte)."""
    if not data:
        raise TruncatedRecord("Empty record")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise TruncatedRecord("Record ends inside its size field")
    n = 0
    for byte in data[start:start + width]:
        n = n << 6 | (byte - 63)
    return n, start + width


def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [(n >> shift & 63) + 63 for shift in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [(n >> shift & 63) + 63 for shift in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"Order {n} exceeds the graph6 size limit")


def _bits_from(body: bytes) -> int:
    value = 0
    for byte in body:
        value = value << 6 | (byte - 63)
    return value


def decode_graph6(line: Line, *, strict: bool = True) -> Graph:
    """
    Decode one graph6 record.

    Args:
        line: Record bytes, optionally prefixed by the >>graph6<< header
        strict: Reject nonzero padding bits

    Returns:
        Graph with exactly the encoded edges

    Raises:
        TruncatedRecord: If the length does not match the size field
        InvalidByte: If a byte lies outside 63..126
        InvalidPadding: If strict and padding bits are nonzero
    """
    data = _as_bytes(line)
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    _check_bytes(data)
    n, offset = _decode_size(data)

    pairs = n * (n - 1) // 2
    body_length = (pairs + 5) // 6
    body = data[offset:]
    if len(body) != body_length:
        raise TruncatedRecord(
            f"Order {n} needs {body_length} body bytes, got {len(body)}"
        )

    padding = body_length * 6 - pairs
    bits = _bits_from(body)
    if strict and bits & ((1 << padding) - 1):
        raise InvalidPadding(f"Nonzero padding bits in record for n={n}")
    bits >>= padding

    rows = [0] * n
    k = pairs - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


def encode_graph6(graph: Graph, header: bool = False) -> bytes:
    """
    Encode a graph as a minimal-length graph6 record (no newline).

    Args:
        graph: Graph to encode; vertex order is preserved
        header: Prefix the >>graph6<< header

    Returns:
        graph6 bytes
    """
    n = graph.n
    adj = graph.adj
    bits = 0
    for j in range(1, n):
        for i in range(j):
            bits = bits << 1 | (adj[i] >> j & 1)
    pairs = n * (n - 1) // 2
    padding = -pairs % 6
    bits <<= padding
    length = (pairs + padding) // 6
    body = bytes((bits >> (6 * (length - 1 - pos)) & 63) + 63 for pos in range(length))
    record = _encode_size(n) + body
    return GRAPH6_HEADER + record if header else record


def graph6_text(graph: Graph) -> str:
    """graph6 record as an ASCII string, for JSON reports and witness lists."""
    return encode_graph6(graph).decode("ascii")


def decode_sparse6(line: Line) -> Graph:
    """
    Decode one sparse6 record (read-only support).

    Args:
        line: Record bytes starting with ':', optionally after the >>sparse6<< header

    Returns:
        Graph with the encoded edges; repeated edges collapse

    Raises:
        TruncatedRecord: If the record is not a sparse6 record or ends inside the size field
        InvalidByte: If a byte lies outside 63..126
        SelfLoop: If the record encodes a loop
    """
    data = _as_bytes(line)
    if data.startswith(SPARSE6_HEADER):
        data = data[len(SPARSE6_HEADER):]
    if not data.startswith(b":"):
        raise TruncatedRecord("sparse6 record must start with ':'")
    data = data[1:]
    _check_bytes(data)
    n, offset = _decode_size(data)

    body = data[offset:]
    total = 6 * len(body)
    bits = _bits_from(body)
    k = max(1, (n - 1).bit_length())

    rows = [0] * n
    v = 0
    pos = 0
    while pos + 1 + k <= total:
        shift = total - pos - 1 - k
        b = bits >> (shift + k) & 1
        x = bits >> shift & ((1 << k) - 1)
        pos += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        elif x == v:
            raise SelfLoop(f"sparse6 record encodes a loop at vertex {v}")
        else:
            rows[x] |= 1 << v
            rows[v] |= 1 << x
    return Graph(n, tuple(rows))


def decode_record(line: Line, *, strict: bool = True) -> Graph:
    """Decode a graph6 or sparse6 record, dispatching on the leading ':'."""
    data = _as_bytes(line)
    if data.startswith(b":") or data.startswith(SPARSE6_HEADER):
        return decode_sparse6(data)
    return decode_graph6(data, strict=strict)


def stream_graph6(
    source: Union[IO, Iterable[Line]],
    *,
    skip_invalid: bool = False,
    strict_padding: bool = True,
    diagnostics: Optional[list[CodecError]] = None,
    first_line: int = 1,
) -> Iterator[Graph]:
    """
    Lazily decode a line-oriented graph6/sparse6 stream.

    A header on the first line is skipped; blank lines are ignored.

    Args:
        source: File object or iterable of lines (bytes or str)
        skip_invalid: Skip corrupt records instead of raising
        strict_padding: Reject nonzero graph6 padding bits
        diagnostics: List that receives one error per skipped record
        first_line: Line number of the first line in `source` (for chunks of a larger file)

    Yields:
        Graphs in file order

    Raises:
        CodecError: First corrupt record (with its 1-based line number) unless skipping
    """
    for number, raw in enumerate(source, start=first_line):
        try:
            data = _as_bytes(raw)
            if number == 1:
                for header in (GRAPH6_HEADER, SPARSE6_HEADER):
                    if data.startswith(header):
                        data = data[len(header):]
            if not data.strip():
                continue
            graph = decode_record(data, strict=strict_padding)
        except GraphError as error:
            if isinstance(error, CodecError):
                located = error.at_line(number)
            else:
                located = CodecError(str(error), number)
            if not skip_invalid:
                raise located from None
            logger.warning(f"Skipping corrupt record: {located}")
            if diagnostics is not None:
                diagnostics.append(located)
            continue
        yield graph
