"""graph6 codec (short form, n <= 62), edge-list text format, and file streaming."""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph, from_edges

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 62


class CodecError(ValueError):
    """Malformed graph input. Carries a 1-based line number when streaming."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _triangle_pairs(n: int) -> list[tuple[int, int]]:
    # column order: (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph6_decode(line: str) -> Graph:
    """Decode one short-form graph6 string into a Graph."""
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise CodecError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise CodecError(f"character {ch!r} outside graph6 range 63..126")
    first = ord(s[0]) - 63
    if first == 63:
        raise CodecError("long-form graph6 (n > 62) not supported")
    n = first
    if n > GRAPH6_MAX_N:
        raise CodecError(f"graph order {n} exceeds {GRAPH6_MAX_N}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) != 1 + nbytes:
        raise CodecError(
            f"graph6 string length {len(s)} wrong for n={n} (expected {1 + nbytes})"
        )
    bitstream = 0
    for ch in s[1:]:
        bitstream = bitstream << 6 | (ord(ch) - 63)
    pad = 6 * nbytes - nbits
    if bitstream & ((1 << pad) - 1):
        raise CodecError("nonzero padding bits in graph6 string")
    bitstream >>= pad
    edges = []
    for k, (i, j) in enumerate(_triangle_pairs(n)):
        if bitstream >> (nbits - 1 - k) & 1:
            edges.append((i, j))
    return from_edges(n, edges)


def graph6_encode(g: Graph) -> str:
    """Encode a Graph as a minimal-length short-form graph6 string, no header."""
    if g.n > GRAPH6_MAX_N:
        raise CodecError(f"graph order {g.n} exceeds graph6 short form limit {GRAPH6_MAX_N}")
    n = g.n
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    bitstream = 0
    for i, j in _triangle_pairs(n):
        bitstream = bitstream << 1 | (g.adj[i] >> j & 1)
    bitstream <<= 6 * nbytes - nbits
    chars = [chr(n + 63)]
    for k in range(nbytes - 1, -1, -1):
        chars.append(chr((bitstream >> 6 * k & 63) + 63))
    return "".join(chars)


def read_edge_list(text: str) -> Graph:
    """Parse the "n m" edge-list format: header line, then m lines "u v"."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise CodecError("missing header line", line=1)
    parts = lines[0].split()
    if len(parts) != 2:
        raise CodecError("header must be 'n m'", line=1)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise CodecError("header must be two integers", line=1) from None
    edges = []
    lineno = 1
    for lineno, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        p = raw.split()
        if len(p) != 2:
            raise CodecError("edge line must be 'u v'", line=lineno)
        try:
            u, v = int(p[0]), int(p[1])
        except ValueError:
            raise CodecError("edge endpoints must be integers", line=lineno) from None
        edges.append((u, v))
    if len(edges) != m:
        raise CodecError(f"declared {m} edges, found {len(edges)}")
    try:
        return from_edges(n, edges)
    except ValueError as exc:
        raise CodecError(str(exc)) from None


def write_edge_list(g: Graph) -> str:
    """Serialize: "n m" then edges ascending with u < v, one per line."""
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph6_stream(lines: Iterable[str]) -> Iterator[Graph]:
    """Yield graphs from graph6 lines in file order; errors carry line numbers.

    A blank final line is ignored; blank lines elsewhere are malformed.
    """
    pending_blank: int | None = None
    for lineno, raw in enumerate(lines, start=1):
        if not raw.strip():
            if pending_blank is None:
                pending_blank = lineno
            continue
        if pending_blank is not None:
            raise CodecError("blank line before end of stream", line=pending_blank)
        try:
            yield graph6_decode(raw)
        except CodecError as exc:
            raise CodecError(str(exc), line=lineno) from None
