"""Edge-list and graph6 serialization, plus the coloring text document."""

from __future__ import annotations

from typing import Iterable

from .core import Coloring
from .exceptions import ParseError
from .graph import Graph


def parse_edgelist(text: str) -> Graph:
    """Parse ``u v`` lines; ``#`` starts a comment and blank lines are skipped.

    A line with a single integer declares an isolated vertex.

    Raises
    ------
    ParseError
        On a malformed token, a loop or a repeated edge (with its line number).
    """
    vertices: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) > 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            ids = [int(tok) for tok in tokens]
        except ValueError:
            raise ParseError(f"vertex ids must be integers, got {line!r}", lineno) from None
        if any(v < 0 for v in ids):
            raise ParseError(f"vertex ids must be non-negative, got {line!r}", lineno)
        vertices.update(ids)
        if len(ids) == 1:
            continue
        u, v = ids
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        e = (min(u, v), max(u, v))
        if e in edges:
            raise ParseError(f"duplicate edge {e[0]} {e[1]}", lineno)
        edges.add(e)
    return Graph(vertices, edges)


def emit_edgelist(g: Graph) -> str:
    lines = [f"{u} {v}" for u, v in g.edge_list()]
    touched = {v for e in g.edges for v in e}
    lines += [str(v) for v in g.sorted_vertices() if v not in touched]
    return "".join(line + "\n" for line in lines)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (n <= 62) to a graph on ``0..n-1``."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ord(ch)} at position {i} outside 63..126")
    n = ord(s[0]) - 63
    if n > 62:
        raise ParseError("graph6 strings with n > 62 are not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise ParseError(f"expected {need} data bytes for n={n}, got {len(body)}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> (5 - i)) & 1 for i in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[k:]):
        raise ParseError("nonzero padding bits")
    return Graph(range(n), edges)


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6, vertices taken in sorted order."""
    order = g.sorted_vertices()
    n = len(order)
    if n > 62:
        raise ParseError("graph6 output is limited to n <= 62")
    bits = [int(g.has_edge(order[i], order[j])) for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + n)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def read_graphs(text: str, fmt: str) -> list[Graph]:
    """One edge-list graph, or one graph per non-blank graph6 line."""
    if fmt == "edgelist":
        return [parse_edgelist(text)]
    if fmt == "graph6":
        return [parse_graph6(line) for line in text.splitlines() if line.strip()]
    raise ParseError(f"unknown format {fmt!r}")


def emit_coloring(c: Coloring, trace_lines: Iterable[str] = ()) -> str:
    lines = [f"k={c.k}"] + [f"{v} {col}" for v, col in c.items()]
    trace_lines = list(trace_lines)
    if trace_lines:
        lines.append("trace:")
        lines += trace_lines
    return "".join(line + "\n" for line in lines)


def parse_coloring(text: str) -> Coloring:
    """Read the document written by :func:`emit_coloring` (trace lines ignored)."""
    k = None
    assignment: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "trace:":
            break
        if k is None:
            if not line.startswith("k="):
                raise ParseError(f"expected header 'k=<int>', got {line!r}", lineno)
            try:
                k = int(line[2:])
            except ValueError:
                raise ParseError(f"bad colour count {line[2:]!r}", lineno) from None
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 'vertex color', got {line!r}", lineno)
        try:
            v, col = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"expected integers, got {line!r}", lineno) from None
        if v in assignment:
            raise ParseError(f"vertex {v} coloured twice", lineno)
        if not 1 <= col <= k:
            raise ParseError(f"colour {col} outside 1..{k}", lineno)
        assignment[v] = col
    if k is None:
        raise ParseError("missing 'k=<int>' header")
    return Coloring(k, assignment)
