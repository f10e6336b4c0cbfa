"""Text formats: graph6 and plain edge lists.

graph6 is the one-line printable encoding used by the common graph
tool-chains: a size field of chars offset by 63, then the upper triangle
of the adjacency matrix read column by column, packed big-endian into
6-bit chunks.  Sizes up to 2**18 - 1 are supported (one- and four-byte
size fields; an eight-byte field is decoded but must stay under the cap).
"""

from __future__ import annotations

from .graphs import MAX_VERTICES, Graph, build_graph

GRAPH6_HEADER = ">>graph6<<"


class FormatError(ValueError):
    """Malformed textual graph input."""


class Graph6Error(FormatError):
    pass


class EdgeListError(FormatError):
    pass


def encode_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 line (no header, no newline)."""
    n = g.n
    if n >= MAX_VERTICES:
        raise Graph6Error(f"size overflow: n={n} is too large for this codec")
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr((n >> 12) + 63), chr(((n >> 6) & 63) + 63), chr((n & 63) + 63)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; tolerates the optional >>graph6<< header."""
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise Graph6Error("empty graph6 input")
    vals = []
    for ch in line:
        code = ord(ch)
        if code < 63 or code > 126:
            raise Graph6Error(f"bad character {ch!r} in graph6 input")
        vals.append(code - 63)
    pos = 0
    if vals[0] < 63:
        n = vals[0]
        pos = 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise Graph6Error("truncated graph6 size field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise Graph6Error("truncated graph6 size field")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    if n >= MAX_VERTICES:
        raise Graph6Error(f"size overflow: n={n} is too large for this codec")
    need_bits = n * (n - 1) // 2
    need_chars = (need_bits + 5) // 6
    body = vals[pos:]
    if len(body) < need_chars:
        raise Graph6Error("truncated graph6 bit stream")
    if len(body) > need_chars:
        raise Graph6Error("unexpected trailing characters in graph6 input")
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            chunk = body[bit // 6]
            if (chunk >> (5 - bit % 6)) & 1:
                edges.append((i, j))
            bit += 1
    return build_graph(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain format: a header line "n m", then m lines "u v".

    Blank lines and lines starting with '#' are skipped.  Empty input is
    the empty graph.  Errors report 1-based line numbers.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: expected two integers, got {line!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise EdgeListError(f"line {lineno}: negative count in header")
            header = (a, b)
        else:
            edges.append((a, b))
    if header is None:
        return build_graph(0, [])
    n, m = header
    if len(edges) != m:
        raise EdgeListError(f"edge count mismatch: header says {m}, found {len(edges)}")
    for idx, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"edge {idx + 1} ({u} {v}): vertex out of range for n={n}")
        if u == v:
            raise EdgeListError(f"edge {idx + 1} ({u} {v}): self-loop")
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    """Render a graph in the edge-list format accepted by parse_edge_list."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
