"""graph6 short-form codec (n <= 62).

Format: header byte 63+n, then the upper triangle in column-major order
(column j = 1..n-1, rows 0..j-1), packed big-endian six bits per byte,
each byte offset by 63, zero-padded to a byte boundary.
"""

import logging
from collections.abc import Iterable, Iterator

from src.models.graph import Graph
from src.utils.exceptions import UnsupportedSizeError, raise_graph_error, raise_parse_error

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
MAX_SHORT_ORDER = 62


class Graph6Codec:
    """Parse and serialize graph6 lines."""

    def parse(self, text: str) -> Graph:
        """
        Decode a graph6 line.

        Args:
            text: One graph6 line; surrounding whitespace and an optional
                ">>graph6<<" prefix are ignored

        Returns:
            Graph with exactly the encoded edge set

        Raises:
            Graph6ParseError: Malformed header, byte out of range, wrong
                length or non-zero padding bits; message names the offset
            UnsupportedSizeError: Long-form header (n > 62)
        """
        line = text.strip()
        if line.startswith(GRAPH6_HEADER):
            line = line[len(GRAPH6_HEADER):]
        if not line:
            raise_parse_error("empty graph6 line", 0)

        header = ord(line[0])
        if header == 126:
            raise_graph_error(
                UnsupportedSizeError,
                "long-form graph6 header (n > 62) is not supported",
                {"offset": 0},
            )
        if not 64 <= header <= 63 + MAX_SHORT_ORDER:
            raise_parse_error(f"malformed header byte {line[0]!r}", 0)
        n = header - 63

        bit_count = n * (n - 1) // 2
        byte_count = (bit_count + 5) // 6
        data = line[1:]
        if len(data) != byte_count:
            raise_parse_error(
                f"expected {byte_count} data bytes for n={n}, got {len(data)}",
                min(len(line), 1 + byte_count),
            )

        values: list[int] = []
        for offset, char in enumerate(data, start=1):
            value = ord(char) - 63
            if not 0 <= value <= 63:
                raise_parse_error(f"byte {char!r} out of range", offset)
            values.append(value)

        rows = [0] * n
        k = 0
        for j in range(1, n):
            for i in range(j):
                if values[k // 6] >> (5 - k % 6) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                k += 1

        if byte_count and bit_count % 6:
            padding = 6 - bit_count % 6
            if values[-1] & ((1 << padding) - 1):
                raise_parse_error("non-zero padding bits", byte_count)

        return Graph(n=n, adj=tuple(rows))

    def serialize(self, g: Graph) -> str:
        """
        Encode a graph as a graph6 line (no trailing newline).

        Raises:
            UnsupportedSizeError: If g has more than 62 vertices
        """
        if g.n > MAX_SHORT_ORDER:
            raise_graph_error(
                UnsupportedSizeError,
                f"graph6 short form supports n <= {MAX_SHORT_ORDER}, got {g.n}",
                {"n": g.n},
            )
        chars = [chr(63 + g.n)]
        value = 0
        filled = 0
        for j in range(1, g.n):
            row = g.adj[j]
            for i in range(j):
                value = value << 1 | (row >> i & 1)
                filled += 1
                if filled == 6:
                    chars.append(chr(63 + value))
                    value = 0
                    filled = 0
        if filled:
            chars.append(chr(63 + (value << (6 - filled))))
        return "".join(chars)

    def read_stream(self, lines: Iterable[str]) -> Iterator[tuple[int, str]]:
        """Yield (1-based line number, stripped text) for every non-blank line."""
        for number, raw in enumerate(lines, start=1):
            text = raw.strip()
            if text:
                yield number, text


# Global instance
graph6_codec = Graph6Codec()


def parse_graph6(text: str) -> Graph:
    return graph6_codec.parse(text)


def to_graph6(g: Graph) -> str:
    return graph6_codec.serialize(g)


def read_graph6_stream(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    return graph6_codec.read_stream(lines)
