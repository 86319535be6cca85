"""
Search universes: built-in generator ranges or external graph6 files.

Universe strings:
    connected:9        connected graphs of order 9
    connected:7-10     orders 7 through 10, tallied separately
    trees:12           free trees of order 12
    g6:PATH            every record of a graph6/sparse6 file
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from attrs import frozen

from graphs.enumeration import CONNECTED, TREES, GeneratorConfig
from graphs.errors import BadParameter

_KINDS = {"connected": CONNECTED, "trees": TREES}


@frozen
class Universe:
    """
    Attributes:
        kind: "connected", "trees" or "g6"
        orders: Orders covered by a generator universe
        path: Source file of a g6 universe
    """

    kind: str
    orders: tuple[int, ...] = ()
    path: Optional[str] = None

    @classmethod
    def parse(cls, text: str) -> Universe:
        """
        Parse a universe string.

        Raises:
            BadParameter: If the string is malformed
        """
        kind, _, rest = text.partition(":")
        if kind == "g6":
            if not rest:
                raise BadParameter(f"g6 universe needs a path: {text!r}")
            return cls("g6", path=rest)
        if kind not in _KINDS or not rest:
            raise BadParameter(f"Universe must look like connected:N, trees:N or g6:PATH: {text!r}")
        try:
            if "-" in rest:
                lo, hi = (int(part) for part in rest.split("-"))
            else:
                lo = hi = int(rest)
        except ValueError:
            raise BadParameter(f"Bad order range in universe {text!r}") from None
        if lo < 1 or hi < lo:
            raise BadParameter(f"Empty order range in universe {text!r}")
        return cls(kind, tuple(range(lo, hi + 1)))

    @property
    def labels(self) -> list[str]:
        """One label per separately tallied sub-universe."""
        if self.kind == "g6":
            return [f"g6:{Path(self.path).name}"]
        return [f"{self.kind}:{n}" for n in self.orders]

    def describe(self) -> str:
        if self.kind == "g6":
            return f"g6:{self.path}"
        lo, hi = self.orders[0], self.orders[-1]
        return f"{self.kind}:{lo}" if lo == hi else f"{self.kind}:{lo}-{hi}"

    def configs(
        self, shard: tuple[int, int] = (0, 1), extended: bool = False
    ) -> list[tuple[str, GeneratorConfig]]:
        """
        Generator configs with their tally labels.

        Raises:
            BadParameter: For g6 universes or out-of-range orders
        """
        if self.kind == "g6":
            raise BadParameter("A g6 universe has no generator configs")
        return [
            (label, GeneratorConfig(n, _KINDS[self.kind], shard=shard, extended=extended))
            for label, n in zip(self.labels, self.orders)
        ]
