"""Slow, obviously-correct reference implementations used only by the tests."""

from __future__ import annotations

from itertools import combinations

import networkx as nx

from forcing_lab.graph import Multigraph, SimpleGraph


def naive_closure(G: SimpleGraph, colored: set[int], order) -> set[int]:
    """Apply the rule one force at a time, scanning vertices in ``order``."""
    colored = set(colored)
    progress = True
    while progress:
        progress = False
        for v in order:
            if v in colored:
                white = [w for w in G.adj[v] if w not in colored]
                if len(white) == 1:
                    colored.add(white[0])
                    progress = True
                    break
    return colored


def naive_min(G: SimpleGraph, total: bool) -> int:
    full = set(range(G.n))
    for k in range(1, G.n + 1):
        for S in combinations(range(G.n), k):
            s = set(S)
            if total and any(not (set(G.adj[v]) & s) for v in s):
                continue
            if naive_closure(G, s, range(G.n)) == full:
                return k
    return G.n


def claw_free_bruteforce(G: SimpleGraph) -> bool:
    for quad in combinations(range(G.n), 4):
        for center in quad:
            leaves = [x for x in quad if x != center]
            if all(G.has_edge(center, x) for x in leaves) and not any(
                G.has_edge(x, y) for x, y in combinations(leaves, 2)
            ):
                return False
    return True


def bfs_connected_cubic(n: int) -> list[SimpleGraph]:
    """Labelled connected cubic graphs in BFS order (with repeats across classes).

    Vertex ``v`` picks its missing neighbours among already discovered vertices
    above it plus a block of fresh labels, so every connected cubic graph
    appears at least once.
    """
    adj: list[set[int]] = [set() for _ in range(n)]
    out = []

    def rec(v: int, nxt: int) -> None:
        if v == n:
            if nxt == n:
                out.append(SimpleGraph(n, [(u, w) for u in range(n) for w in adj[u] if u < w]))
            return
        need = 3 - len(adj[v])
        if need == 0:
            rec(v + 1, nxt)
            return
        if v >= nxt:
            return
        cands = [w for w in range(v + 1, nxt) if len(adj[w]) < 3 and w not in adj[v]]
        for r in range(need + 1):
            fresh = need - r
            if nxt + fresh > n:
                continue
            for ws in combinations(cands, r):
                chosen = list(ws) + list(range(nxt, nxt + fresh))
                for w in chosen:
                    adj[v].add(w)
                    adj[w].add(v)
                rec(v + 1, nxt + fresh)
                for w in chosen:
                    adj[v].discard(w)
                    adj[w].discard(v)

    rec(0, 1)
    return out


def iso_classes(graphs) -> list[nx.Graph]:
    reps: list[nx.Graph] = []
    for G in graphs:
        g = nx.Graph(G.edges())
        if not any(nx.is_isomorphic(g, r) for r in reps):
            reps.append(g)
    return reps


def naive_cycle_packing(M: Multigraph) -> tuple[int, int]:
    """Best (covered, count) over all sets of vertex-disjoint cycles, by brute force."""
    cycles = []
    for u in range(M.n):
        for v in range(u + 1, M.n):
            if M.mult[u][v] >= 2:
                cycles.append(frozenset((u, v)))
    simple = nx.Graph([(u, v) for u, v, _ in M.edge_list()])
    simple.add_nodes_from(range(M.n))
    for c in nx.simple_cycles(simple):
        if len(c) >= 3:
            cycles.append(frozenset(c))
    best = (0, 0)

    def rec(i: int, used: frozenset, covered: int, count: int) -> None:
        nonlocal best
        best = max(best, (covered, count))
        for j in range(i, len(cycles)):
            if not cycles[j] & used:
                rec(j + 1, used | cycles[j], covered + len(cycles[j]), count + 1)

    rec(0, frozenset(), 0, 0)
    return best


def random_clawfree_cubic(rng, max_n: int) -> SimpleGraph:
    """Random connected claw-free cubic graph: a random multigraph with triangles and diamonds substituted."""
    while True:
        t, d = rng.randint(0, max_n // 3), rng.randint(0, max_n // 4)
        if t + d < 2 or t % 2 or 3 * t + 4 * d > max_n:
            continue
        stubs = [v for v in range(t + d) for _ in range(3 if v < t else 2)]
        rng.shuffle(stubs)
        pairs = list(zip(stubs[::2], stubs[1::2]))
        if any(u == v for u, v in pairs):
            continue
        ports, edges, nxt = [], [], 0
        for v in range(t + d):
            if v < t:
                edges += [(nxt, nxt + 1), (nxt, nxt + 2), (nxt + 1, nxt + 2)]
                ports.append([nxt, nxt + 1, nxt + 2])
                nxt += 3
            else:
                a, b, c, e = range(nxt, nxt + 4)
                edges += [(a, c), (a, e), (b, c), (b, e), (c, e)]
                ports.append([a, b])
                nxt += 4
        edges += [(ports[u].pop(), ports[v].pop()) for u, v in pairs]
        if len({(min(e), max(e)) for e in edges}) != len(edges):
            continue
        G = SimpleGraph(nxt, edges)
        g = nx.Graph(edges)
        if nx.is_connected(g) and G.n > 4:
            return G
