"""Write every connected claw-free cubic graph on at most MAX_N vertices as graph6.

A connected claw-free cubic graph other than K4 is determined by the
multigraph H obtained by shrinking its triangle-units to degree-3 vertices
and its diamond-units to degree-2 vertices.  This script enumerates the
loopless connected H with ``3t + 4d <= MAX_N``, expands each one and keeps one
graph per isomorphism class.  K4 is appended by hand.

    python scripts/make_clawfree_corpus.py > tests/fixtures/clawfree_cubic_le14.g6
"""

from __future__ import annotations

import sys

import networkx as nx

from forcing_lab.codecs import to_graph6
from forcing_lab.families import complete_graph
from forcing_lab.graph import SimpleGraph, is_claw_free, is_connected, is_cubic

MAX_N = 14


def labeled_multigraphs(degrees):
    n = len(degrees)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    deg = [0] * n
    mult = {}

    def rec(i):
        if i == len(pairs):
            if deg == list(degrees):
                yield dict(mult)
            return
        u, v = pairs[i]
        for m in range(4):
            if deg[u] + m > degrees[u] or deg[v] + m > degrees[v]:
                break
            mult[(u, v)] = m
            deg[u] += m
            deg[v] += m
            yield from rec(i + 1)
            deg[u] -= m
            deg[v] -= m
        mult.pop((u, v), None)

    yield from rec(0)


def expand(t, d, mult):
    """Triangles for the first t vertices of H, diamonds for the next d."""
    ports, edges, nxt = [], [], 0
    for _ in range(t):
        x, y, z = nxt, nxt + 1, nxt + 2
        edges += [(x, y), (x, z), (y, z)]
        ports.append([x, y, z])
        nxt += 3
    for _ in range(d):
        a, b, c, dd = nxt, nxt + 1, nxt + 2, nxt + 3
        edges += [(a, c), (a, dd), (b, c), (b, dd), (c, dd)]
        ports.append([a, b])
        nxt += 4
    for (u, v), m in sorted(mult.items()):
        for _ in range(m):
            edges.append((ports[u].pop(0), ports[v].pop(0)))
    return SimpleGraph(nxt, edges)


def main() -> None:
    found: dict[int, list[nx.Graph]] = {}
    out: list[SimpleGraph] = []
    for t in range(0, MAX_N // 3 + 1):
        for d in range(0, (MAX_N - 3 * t) // 4 + 1):
            if t + d < 2:
                continue
            for mult in labeled_multigraphs([3] * t + [2] * d):
                G = expand(t, d, mult)
                if not (is_connected(G) and is_cubic(G) and is_claw_free(G)):
                    continue
                g = nx.Graph(G.edges())
                bucket = found.setdefault(G.n, [])
                if any(nx.is_isomorphic(g, h) for h in bucket):
                    continue
                bucket.append(g)
                out.append(G)
    out.append(complete_graph(4))
    out.sort(key=lambda G: (G.n, to_graph6(G)))
    for G in out:
        sys.stdout.write(to_graph6(G) + "\n")


if __name__ == "__main__":
    main()
