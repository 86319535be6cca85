"""
Exception hierarchy for graph construction, decoding and invariant computation.
Every error is a ValueError so callers can catch bad input uniformly.
"""

from typing import Optional


class GraphError(ValueError):
    """Base class for all graph-related errors."""


class InvalidEdge(GraphError):
    """Edge endpoint outside 0..n-1."""


class SelfLoop(GraphError):
    """Edge joining a vertex to itself."""


class VertexOutOfRange(GraphError):
    """Vertex argument outside 0..n-1."""


class EmptyGraph(GraphError):
    """Operation needs at least one vertex."""


class Disconnected(GraphError):
    """Operation is defined only for connected graphs."""


class TooSmall(GraphError):
    """Graph order below the operation's minimum."""


class NotATree(GraphError):
    """Operation expects a tree."""


class TooLarge(GraphError):
    """Result or input order exceeds the configured capacity."""


class BadParameter(GraphError):
    """Family or generator parameter outside its valid range."""


class UnknownTask(GraphError, KeyError):
    """Name not present in the reproduction registry or predicate table."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class CodecError(GraphError):
    """
    Base class for graph6/sparse6 decoding errors.

    Attributes:
        line: 1-based line number in the source stream, when known
    """

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.message = message
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)

    def at_line(self, line: int) -> "CodecError":
        """Return a copy of this error tagged with a stream line number."""
        return type(self)(self.message, line)

    def __reduce__(self):
        return type(self), (self.message, self.line)


class TruncatedRecord(CodecError):
    """Record shorter or longer than its size field implies."""


class InvalidByte(CodecError):
    """Byte outside the printable range 63..126."""


class InvalidPadding(CodecError):
    """Nonzero bits after the last encoded adjacency bit."""


class SearchAborted(RuntimeError):
    """
    A predicate raised while examining a graph.

    Attributes:
        graph6: Encoding of the offending graph
    """

    def __init__(self, message: str, graph6: str) -> None:
        self.message = message
        self.graph6 = graph6
        super().__init__(f"{message} (graph6: {graph6})")

    def __reduce__(self):
        return type(self), (self.message, self.graph6)
