"""
graph6/sparse6 codec tests.
Tests cover known encodings, size fields, corrupt records and stream handling.
"""

import io

import networkx as nx
import pytest

from graphs.codec import (
    decode_graph6,
    decode_record,
    decode_sparse6,
    encode_graph6,
    graph6_text,
    stream_graph6,
)
from graphs.construct import complete_graph, cycle_graph, path_graph, random_graph
from graphs.errors import (
    CodecError,
    InvalidByte,
    InvalidPadding,
    SelfLoop,
    TruncatedRecord,
)
from graphs.graph import Graph, build_graph


class TestGraph6Encoding:
    """Test cases for known graph6 strings."""

    @pytest.mark.smoke
    @pytest.mark.codec
    @pytest.mark.parametrize(
        "graph, text",
        [
            (complete_graph(1), "@"),
            (complete_graph(2), "A_"),
            (build_graph(2, []), "A?"),
            (complete_graph(3), "Bw"),
            (path_graph(3), "Bg"),
            (cycle_graph(4), "Cl"),
            (complete_graph(4), "C~"),
            (build_graph(0, []), "?"),
        ],
    )
    def test_known_strings(self, graph: Graph, text: str) -> None:
        """
        Test encoding and decoding of hand-checked records.

        Args:
            graph: Graph under test
            text: Its graph6 record
        """
        assert graph6_text(graph) == text
        assert decode_graph6(text) == graph

    @pytest.mark.codec
    def test_header_prefix(self) -> None:
        """Test that the optional header is written and accepted."""
        assert encode_graph6(complete_graph(2), header=True) == b">>graph6<<A_"
        assert decode_graph6(b">>graph6<<A_") == complete_graph(2)

    @pytest.mark.codec
    def test_trailing_newline_ignored(self) -> None:
        """Test that line terminators are stripped."""
        assert decode_graph6(b"Bw\r\n") == complete_graph(3)

    @pytest.mark.codec
    @pytest.mark.parametrize("n", [62, 63, 100])
    def test_multibyte_size_field(self, n: int) -> None:
        """
        Test orders around the one-byte size limit.

        Args:
            n: Path order
        """
        record = encode_graph6(path_graph(n))
        assert (record[0] == 126) == (n > 62)
        assert decode_graph6(record) == path_graph(n)

    @pytest.mark.codec
    def test_agrees_with_networkx(self, rng) -> None:
        """Test that networkx decodes our records to the same edge sets."""
        for _ in range(25):
            graph = random_graph(rng.randint(1, 20), rng, 0.4)
            decoded = nx.from_graph6_bytes(encode_graph6(graph))
            assert sorted(tuple(sorted(e)) for e in decoded.edges()) == graph.edges()

    @pytest.mark.codec
    def test_round_trip_connected_graphs(self, connected_of_order, known_counts) -> None:
        """Test round trip and distinct records over every connected graph up to order 7."""
        records = set()
        for n in range(1, 8):
            for graph in connected_of_order(n):
                record = encode_graph6(graph)
                assert decode_graph6(record) == graph
                records.add(record)
        assert len(records) == sum(known_counts["connected_graphs"][:7])

    @pytest.mark.codec
    def test_round_trip_random_graphs(self, rng) -> None:
        """Test round trip on 10000 random graphs of order 1..50 and any density."""
        for _ in range(10_000):
            graph = random_graph(rng.randint(1, 50), rng, rng.random())
            assert decode_graph6(encode_graph6(graph)) == graph


class TestGraph6Errors:
    """Test cases for corrupt graph6 records."""

    @pytest.mark.codec
    @pytest.mark.negative
    def test_nonzero_padding(self) -> None:
        """Test that nonzero padding is rejected in strict mode only."""
        with pytest.raises(InvalidPadding):
            decode_graph6("A`")
        assert decode_graph6("A`", strict=False) == complete_graph(2)

    @pytest.mark.codec
    @pytest.mark.negative
    @pytest.mark.parametrize("text", ["B", "Bww", "~??", ""])
    def test_truncated_records(self, text: str) -> None:
        """
        Test length mismatches against the size field.

        Args:
            text: Corrupt record
        """
        with pytest.raises(TruncatedRecord):
            decode_graph6(text)

    @pytest.mark.codec
    @pytest.mark.negative
    def test_invalid_byte(self) -> None:
        """Test that bytes outside 63..126 are rejected."""
        with pytest.raises(InvalidByte):
            decode_graph6("B ")

    @pytest.mark.codec
    @pytest.mark.negative
    @pytest.mark.parametrize("text", ["B\u00e9", "\u00e9", "C\u00a0l", ":A\u00e9"])
    def test_non_ascii_text(self, text: str) -> None:
        """
        Test that non-ASCII characters in text records are rejected, not replaced.

        Args:
            text: Record containing a non-ASCII character
        """
        with pytest.raises(InvalidByte):
            decode_record(text)

    @pytest.mark.codec
    @pytest.mark.negative
    def test_non_ascii_line_in_stream(self) -> None:
        """Test that a non-ASCII text line is located and can be skipped."""
        with pytest.raises(InvalidByte) as error:
            list(stream_graph6(["A_", "B\u00e9"]))
        assert error.value.line == 2
        assert len(list(stream_graph6(["A_", "B\u00e9", "Bw"], skip_invalid=True))) == 2


class TestSparse6:
    """Test cases for the sparse6 reader."""

    @pytest.mark.codec
    def test_single_edge(self) -> None:
        """Test the sparse6 record of K2."""
        assert decode_sparse6(":An") == complete_graph(2)
        assert decode_record(":An") == complete_graph(2)

    @pytest.mark.codec
    def test_agrees_with_networkx(self, rng) -> None:
        """Test sparse6 records written by networkx."""
        for _ in range(25):
            graph = random_graph(rng.randint(2, 30), rng, 0.15)
            nx_graph = nx.Graph()
            nx_graph.add_nodes_from(range(graph.n))
            nx_graph.add_edges_from(graph.edges())
            record = nx.to_sparse6_bytes(nx_graph, header=False).strip()
            assert decode_record(record) == graph

    @pytest.mark.codec
    @pytest.mark.negative
    def test_loop_rejected(self) -> None:
        """Test that an encoded loop is rejected."""
        with pytest.raises(SelfLoop):
            decode_sparse6(":AN")


class TestStream:
    """Test cases for line-oriented streams."""

    @pytest.mark.codec
    def test_header_and_blank_lines(self) -> None:
        """Test that a first-line header and blank lines are skipped."""
        source = io.BytesIO(b">>graph6<<A_\n\nBw\n:An\n")
        graphs = list(stream_graph6(source))
        assert graphs == [complete_graph(2), complete_graph(3), complete_graph(2)]

    @pytest.mark.codec
    @pytest.mark.negative
    def test_corrupt_line_reports_line_number(self) -> None:
        """Test that the first corrupt record aborts with its line number."""
        with pytest.raises(CodecError) as error:
            list(stream_graph6(["A_\n", "Bw\n", "B\n", "C~\n"]))
        assert error.value.line == 3
        assert isinstance(error.value, TruncatedRecord)
        assert "line 3" in str(error.value)

    @pytest.mark.codec
    @pytest.mark.negative
    def test_skip_invalid_collects_diagnostics(self) -> None:
        """Test that skipping keeps good records and reports each bad one."""
        diagnostics: list[CodecError] = []
        lines = ["A_", "A`", "Bw", "B ", ":AN"]
        graphs = list(stream_graph6(lines, skip_invalid=True, diagnostics=diagnostics))
        assert graphs == [complete_graph(2), complete_graph(3)]
        assert [error.line for error in diagnostics] == [2, 4, 5]

    @pytest.mark.codec
    def test_first_line_offset(self) -> None:
        """Test line numbering for a chunk taken from the middle of a file."""
        with pytest.raises(CodecError) as error:
            list(stream_graph6(["A_", "?x"], first_line=101))
        assert error.value.line == 102
