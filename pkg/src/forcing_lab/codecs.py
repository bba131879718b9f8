"""Text codecs: graph6 for simple graphs, plus small line formats.

Edge-list format: first line ``n``, then one ``u v`` line per edge.
Multigraph format: first line ``n``, then one ``u v mult`` line per unordered pair.
Blank lines and ``#`` comments are ignored in both.
"""

from __future__ import annotations

from .errors import GraphError, ParseError
from .graph import Multigraph, SimpleGraph

GRAPH6_HEADER = ">>graph6<<"
MAX_GRAPH6_N = 62


def to_graph6(G: SimpleGraph, header: bool = False) -> str:
    if G.n > MAX_GRAPH6_N:
        raise ValueError(f"graph6 writer supports n <= {MAX_GRAPH6_N}, got {G.n}")
    bits = [1 if G.has_edge(i, j) else 0 for j in range(1, G.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k : k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return (GRAPH6_HEADER if header else "") + chr(63 + G.n) + body


def from_graph6(text: str | bytes) -> SimpleGraph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise ParseError("empty graph6 string")
    if s[0] == ":" or s.startswith(">>sparse6<<"):
        raise ParseError("sparse6 input is not supported")
    if s[0] == "&":
        raise ParseError("digraph6 input is not supported")
    codes = [ord(ch) - 63 for ch in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise ParseError(f"invalid graph6 character in {s!r}")
    n = codes[0]
    if n == 63:
        raise ParseError(f"graph6 with n > {MAX_GRAPH6_N} is not supported")
    need = n * (n - 1) // 2
    body = codes[1:]
    if len(body) != (need + 5) // 6:
        raise ParseError(f"graph6 body length {len(body)} does not match n={n}")
    bits = [(c >> (5 - k)) & 1 for c in body for k in range(6)]
    if any(bits[need:]):
        raise ParseError("nonzero graph6 padding bits")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return SimpleGraph(n, edges)


def _data_lines(text: str) -> list[list[str]]:
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    return rows


def _parse_int(tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}") from None


def from_edgelist(text: str) -> SimpleGraph:
    rows = _data_lines(text)
    if not rows or len(rows[0]) != 1:
        raise ParseError("edge list must start with a line holding n")
    n = _parse_int(rows[0][0])
    edges = []
    for row in rows[1:]:
        if len(row) != 2:
            raise ParseError(f"bad edge line {' '.join(row)!r}")
        edges.append((_parse_int(row[0]), _parse_int(row[1])))
    try:
        return SimpleGraph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def to_edgelist(G: SimpleGraph) -> str:
    return "\n".join([str(G.n)] + [f"{u} {v}" for u, v in G.edges()]) + "\n"


def from_multigraph_text(text: str) -> Multigraph:
    rows = _data_lines(text)
    if not rows or len(rows[0]) != 1:
        raise ParseError("multigraph text must start with a line holding n")
    n = _parse_int(rows[0][0])
    edges = []
    seen = set()
    for row in rows[1:]:
        if len(row) != 3:
            raise ParseError(f"bad multigraph line {' '.join(row)!r}")
        u, v, m = (_parse_int(t) for t in row)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"pair {key} listed twice")
        seen.add(key)
        edges.append((u, v, m))
    try:
        return Multigraph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def to_multigraph_text(M: Multigraph) -> str:
    return "\n".join([str(M.n)] + [f"{u} {v} {m}" for u, v, m in M.edge_list()]) + "\n"
