"""Deterministic generators for the named graph families.

Frozen layouts
--------------
* ``diamond_necklace(k)``: vertices ``4(i-1) + 0..3`` hold ``a_i, b_i, c_i, d_i``;
  ``a_i b_i`` is the missing diamond edge and ``a_i b_{i+1}`` (``a_k b_1``) link
  consecutive diamonds.
* ``prism()``: triangles ``{0,1,2}`` and ``{3,4,5}`` plus the matching
  ``03, 14, 25``.
* ``triangle_expansion(M)``: multigraph vertex ``v`` becomes the triangle
  ``3v, 3v+1, 3v+2``.
* ``paper_graph``: vertex names are exposed in the returned name map.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import BadParameterError, InstanceTooLargeError, KTooSmallError, NotCubicMultigraphError
from .graph import Multigraph, SimpleGraph


@dataclass(frozen=True)
class NecklaceLayout:
    k: int

    def a(self, i: int) -> int:
        return 4 * (i - 1)

    def b(self, i: int) -> int:
        return 4 * (i - 1) + 1

    def c(self, i: int) -> int:
        return 4 * (i - 1) + 2

    def d(self, i: int) -> int:
        return 4 * (i - 1) + 3

    def names(self) -> dict[str, int]:
        out = {}
        for i in range(1, self.k + 1):
            for letter in "abcd":
                out[f"{letter}{i}"] = getattr(self, letter)(i)
        return out


def diamond_necklace(k: int) -> tuple[SimpleGraph, NecklaceLayout]:
    if k < 2:
        raise KTooSmallError(f"diamond necklaces need k >= 2, got {k}")
    L = NecklaceLayout(k)
    edges = []
    for i in range(1, k + 1):
        a, b, c, d = L.a(i), L.b(i), L.c(i), L.d(i)
        edges += [(a, c), (a, d), (b, c), (b, d), (c, d)]
        edges.append((a, L.b(i % k + 1)))
    return SimpleGraph(4 * k, edges), L


def prism() -> SimpleGraph:
    return SimpleGraph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def triangle_expansion(
    M: Multigraph, port_assignment: list[tuple[int, int, int]] | None = None
) -> tuple[SimpleGraph, list[tuple[int, int, int]]]:
    """Replace every vertex of a cubic multigraph by a triangle.

    Edge instances are taken in :meth:`Multigraph.edge_instances` order; the
    ``j``-th instance met at vertex ``v`` is attached to corner
    ``port_assignment[v][j]`` (default ``(0, 1, 2)``).  Returns the graph and
    the triangle of each multigraph vertex.
    """
    if not M.is_cubic():
        raise NotCubicMultigraphError("triangle expansion needs a cubic multigraph")
    ports = port_assignment or [(0, 1, 2)] * M.n
    if len(ports) != M.n or any(sorted(p) != [0, 1, 2] for p in ports):
        raise BadParameterError("port assignment must give a permutation of (0, 1, 2) per vertex")
    used = [0] * M.n
    edges = []
    for v in range(M.n):
        edges += [(3 * v, 3 * v + 1), (3 * v, 3 * v + 2), (3 * v + 1, 3 * v + 2)]
    for u, v, _ in M.edge_instances():
        cu = 3 * u + ports[u][used[u]]
        cv = 3 * v + ports[v][used[v]]
        used[u] += 1
        used[v] += 1
        edges.append((cu, cv))
    units = [(3 * v, 3 * v + 1, 3 * v + 2) for v in range(M.n)]
    return SimpleGraph(3 * M.n, edges), units


def _labeled_cubic_matrices(n: int):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    deg = [0] * n
    vec = [0] * len(pairs)

    def rec(i: int):
        if i == len(pairs):
            if all(d == 3 for d in deg):
                yield tuple(vec)
            return
        u, v = pairs[i]
        for m in range(4):
            if deg[u] + m > 3 or deg[v] + m > 3:
                break
            if v == n - 1 and deg[u] + m != 3:
                continue  # last chance to complete row u
            vec[i] = m
            deg[u] += m
            deg[v] += m
            yield from rec(i + 1)
            deg[u] -= m
            deg[v] -= m
        vec[i] = 0

    yield from rec(0)


def enumerate_cubic_multigraphs(n: int) -> list[Multigraph]:
    """All loopless cubic multigraphs on ``n`` vertices, one per isomorphism class.

    Each class is represented by its minimum upper-triangle multiplicity vector
    over all vertex permutations.  The whole orbit of a newly met matrix is
    marked as seen, so every class costs ``n!`` permutations once.
    """
    if not 2 <= n <= 8:
        raise InstanceTooLargeError(f"cubic multigraph enumeration supports 2 <= n <= 8, got {n}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    index = {p: i for i, p in enumerate(pairs)}
    perm_maps = []
    for perm in permutations(range(n)):
        perm_maps.append(
            [index[(perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])] for u, v in pairs]
        )
    seen: set[tuple[int, ...]] = set()
    reps = []
    for vec in _labeled_cubic_matrices(n):
        if vec in seen:
            continue
        orbit = set()
        for pm in perm_maps:
            image = [0] * len(pairs)
            for i, j in enumerate(pm):
                image[j] = vec[i]
            orbit.add(tuple(image))
        seen |= orbit
        reps.append(min(orbit))
    reps.sort()
    return [Multigraph(n, [(u, v, m) for (u, v), m in zip(pairs, vec) if m]) for vec in reps]


def fig4_multigraph(ell: int) -> Multigraph:
    """Contraction of the ``ell``-unit extremal-case graph: a cycle doubled on every other edge."""
    if ell < 4 or ell % 2:
        raise BadParameterError(f"need an even cycle length >= 4, got {ell}")
    return Multigraph(ell, [(i, (i + 1) % ell, 2 if i % 2 == 0 else 1) for i in range(ell)])


def _fig4(ell: int) -> tuple[SimpleGraph, dict[str, int]]:
    if ell < 4 or ell % 2:
        raise BadParameterError(f"Fig4 needs an even cycle length >= 4, got {ell}")
    names = {f"v{i}_{j}": 3 * (i - 1) + (j - 1) for i in range(1, ell + 1) for j in (1, 2, 3)}
    v = lambda i, j: names[f"v{(i - 1) % ell + 1}_{j}"]  # noqa: E731
    edges = []
    for i in range(1, ell + 1):
        edges += [(v(i, 1), v(i, 2)), (v(i, 1), v(i, 3)), (v(i, 2), v(i, 3))]
        edges.append((v(i, 2), v(i + 1, 1)))
    for i in range(1, ell // 2 + 1):
        edges.append((v(2 * i - 1, 3), v(2 * i, 3)))
    return SimpleGraph(3 * ell, edges), names


def _named(order: str, edges: str) -> tuple[SimpleGraph, dict[str, int]]:
    labels = order.split()
    names = {x: i for i, x in enumerate(labels)}
    pairs = [(names[p.split("-")[0]], names[p.split("-")[1]]) for p in edges.split()]
    return SimpleGraph(len(labels), pairs), names


def paper_graph(name: str, ell: int | None = None) -> tuple[SimpleGraph, dict[str, int]]:
    """Small worked-example graphs with their conventional vertex names.

    ``"fig4"`` takes the even cycle length ``ell``; ``"fig7"`` is the 10-vertex
    graph with one diamond and ``"fig9"`` the 14-vertex graph with two.
    """
    key = name.lower()
    if key == "fig4":
        return _fig4(6 if ell is None else ell)
    if key == "fig7":
        return _named(
            "a b c d e e1 e2 f f1 f2",
            "a-c a-d b-c b-d c-d a-e b-f e-e1 e-e2 e1-e2 f-f1 f-f2 f1-f2 e1-f1 e2-f2",
        )
    if key == "fig9":
        return _named(
            "a b c d e f g h i j k l m p",
            "a-e a-c a-d b-c b-d c-d b-f e-f g-e g-f g-h h-i h-j i-k i-j j-l k-m k-p l-m l-p m-p",
        )
    raise BadParameterError(f"unknown named graph {name!r}")
