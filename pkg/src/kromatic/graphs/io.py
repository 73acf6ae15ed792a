"""graph6 and edge-list text formats.

graph6 follows McKay's convention: a size header followed by the upper
triangle of the adjacency matrix, column by column, packed six bits per
printable byte (value + 63).
"""
from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from ..errors import ParseError
from .core import MAX_VERTICES, Graph

_HEADER = ">>graph6<<"


def _size_header(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        aj = g.adj[j]
        for i in range(j):
            bits.append(aj >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = v << 1 | b
        body.append(chr(v + 63))
    return _size_header(g.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (surrounding whitespace and the optional
    ``>>graph6<<`` header are ignored)."""
    s = text.strip()
    start = 0
    if s.startswith(_HEADER):
        start = len(_HEADER)
    if start >= len(s):
        raise ParseError("empty graph6 string", start)
    for off in range(start, len(s)):
        if not 63 <= ord(s[off]) <= 126:
            raise ParseError(f"character {s[off]!r} outside graph6 range 63..126", off)
    if s[start] == "~":
        if start + 1 < len(s) and s[start + 1] == "~":
            raise ParseError("8-byte size header not supported", start)
        if len(s) < start + 4:
            raise ParseError("truncated size header", start)
        n = 0
        for off in range(start + 1, start + 4):
            n = n << 6 | (ord(s[off]) - 63)
        pos = start + 4
        if n < 63:
            raise ParseError("long size header used for n < 63", start)
    else:
        n = ord(s[start]) - 63
        pos = start + 1
    if n == 0:
        raise ParseError("graphs with zero vertices are not supported", start)
    if n > MAX_VERTICES:
        raise ParseError(f"n={n} exceeds the vertex cap {MAX_VERTICES}", start)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - pos != nbytes:
        raise ParseError(
            f"expected {nbytes} adjacency bytes for n={n}, found {len(s) - pos}",
            min(len(s), pos + nbytes) if len(s) - pos > nbytes else len(s),
        )
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[pos + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6:
        last = ord(s[pos + nbytes - 1]) - 63
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise ParseError("nonzero padding bits", pos + nbytes - 1)
    return Graph(n, tuple(adj))


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n; u v; u v; ..."`` (vertices numbered from 0)."""
    fields = [f.strip() for f in text.strip().split(";")]
    fields = [f for f in fields if f]
    if not fields:
        raise ParseError("empty edge list", 0)
    try:
        n = int(fields[0])
    except ValueError:
        raise ParseError(f"bad vertex count {fields[0]!r}", 0) from None
    if not 1 <= n <= MAX_VERTICES:
        raise ParseError(f"vertex count {n} outside 1..{MAX_VERTICES}", 0)
    edges = []
    for f in fields[1:]:
        parts = f.split()
        if len(parts) != 2:
            raise ParseError(f"edge {f!r} must have two endpoints", text.find(f))
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"bad edge {f!r}", text.find(f)) from None
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge {f!r} invalid for n={n}", text.find(f))
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    return "; ".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()])


def parse_graph(text: str) -> Graph:
    """Parse either format; edge lists are recognised by a ``;``."""
    return parse_edge_list(text) if ";" in text else parse_graph6(text)


def read_graphs(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each nonblank line.

    Blank lines, ``#`` comments and a ``>>graph6<<`` line are skipped.
    Parse errors propagate with the line number prepended.
    """
    for lineno, line in enumerate(lines, 1):
        s = line.strip()
        if not s or s.startswith("#") or s == _HEADER:
            continue
        try:
            yield lineno, parse_graph(s)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc


def write_graphs(graphs: Iterable[Graph], fh: TextIO) -> None:
    for g in graphs:
        fh.write(to_graph6(g) + "\n")
