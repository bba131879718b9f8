"""Triangle/diamond decomposition of claw-free cubic graphs and its contraction.

A connected claw-free cubic graph other than K4 splits uniquely into vertex
sets inducing a triangle or a diamond (K4 minus an edge).  When every cell is
a triangle, contracting the cells gives a cubic multigraph; a cycle
collection in that multigraph which covers the most vertices and, subject to
that, has the most cycles drives the total forcing set construction in
:mod:`forcing_lab.builders`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import (
    HasDiamondUnitError,
    InstanceTooLargeError,
    IsK4Error,
    LayeringStalledError,
    NotClawFreeCubicError,
    PartitionFailureError,
)
from .graph import Multigraph, SimpleGraph, bits_of, is_claw_free, is_cubic, iter_bits

TRIANGLE = "triangle"
DIAMOND = "diamond"
MAX_PACKING_VERTICES = 12


@dataclass(frozen=True)
class Unit:
    kind: str
    vertices: tuple[int, ...]
    missing_pair: tuple[int, int] | None = None

    @property
    def inner(self) -> tuple[int, ...]:
        """For a diamond, the two vertices adjacent to all others."""
        if self.missing_pair is None:
            return self.vertices
        return tuple(v for v in self.vertices if v not in self.missing_pair)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": list(self.vertices),
            "missing_pair": list(self.missing_pair) if self.missing_pair else None,
        }


@dataclass(frozen=True)
class DeltaDPartition:
    units: tuple[Unit, ...]
    vertex_to_unit: tuple[int, ...]

    @property
    def diamonds(self) -> list[Unit]:
        return [u for u in self.units if u.kind == DIAMOND]

    @property
    def triangles(self) -> list[Unit]:
        return [u for u in self.units if u.kind == TRIANGLE]

    def to_json(self) -> dict:
        return {"units": [u.to_json() for u in self.units]}


def triangles_of(G: SimpleGraph) -> list[tuple[int, int, int]]:
    out = []
    for v in range(G.n):
        for u, w in combinations(G.adj[v], 2):
            if v < u and G.has_edge(u, w):
                out.append((v, u, w))
    return out


def triangle_diamond_partition(G: SimpleGraph) -> DeltaDPartition:
    if G.n == 4 and G.edge_count == 6:
        raise IsK4Error("K4 has no triangle/diamond partition")
    if not (is_cubic(G) and is_claw_free(G)):
        raise NotClawFreeCubicError("partition needs a claw-free cubic graph")
    tris = triangles_of(G)
    # triangles sharing an edge are merged first so a diamond is never split
    by_edge: dict[tuple[int, int], list[int]] = {}
    for t, (x, y, z) in enumerate(tris):
        for e in ((x, y), (x, z), (y, z)):
            by_edge.setdefault(e, []).append(t)
    partner: dict[int, int] = {}
    for members in by_edge.values():
        if len(members) > 2:
            raise IsK4Error("an edge lies in three triangles, so the graph contains K4")
        if len(members) == 2:
            s, t = members
            if partner.get(s, t) != t or partner.get(t, s) != s:
                raise IsK4Error("a triangle shares edges with two others, so the graph contains K4")
            partner[s], partner[t] = t, s
    cells: list[Unit] = []
    for t, tri in enumerate(tris):
        if t not in partner:
            cells.append(Unit(TRIANGLE, tri))
        elif t < partner[t]:
            verts = tuple(sorted(set(tri) | set(tris[partner[t]])))
            a, b = (v for v in verts if v not in tri or v not in tris[partner[t]])
            cells.append(Unit(DIAMOND, verts, (min(a, b), max(a, b))))
    cells.sort(key=lambda u: u.vertices)
    owner = [-1] * G.n
    for i, unit in enumerate(cells):
        for v in unit.vertices:
            if owner[v] != -1:
                raise PartitionFailureError(f"vertex {v} lies in two units")
            owner[v] = i
    if -1 in owner:
        raise PartitionFailureError(f"vertex {owner.index(-1)} lies in no triangle")
    return DeltaDPartition(tuple(cells), tuple(owner))


def contraction_multigraph(G: SimpleGraph, P: DeltaDPartition) -> tuple[Multigraph, tuple[Unit, ...]]:
    """One multigraph vertex per triangle-unit; multiplicities count joining G-edges.

    Multigraph vertex ``i`` is ``P.units[i]``; ``P.vertex_to_unit`` maps back
    from G-vertices.
    """
    if P.diamonds:
        raise HasDiamondUnitError("contraction needs every unit to be a triangle")
    k = len(P.units)
    mult = [[0] * k for _ in range(k)]
    for u, v in G.edges():
        a, b = P.vertex_to_unit[u], P.vertex_to_unit[v]
        if a != b:
            mult[a][b] += 1
            mult[b][a] += 1
    return Multigraph.from_matrix(mult), P.units


@dataclass(frozen=True)
class Cycle:
    """A cycle of a multigraph given as a cyclic vertex sequence.

    ``vertices`` starts at its smallest vertex and runs towards the smaller of
    that vertex's two cycle neighbours.  ``edges[i]`` is the edge instance
    ``(min, max, index)`` joining ``vertices[i]`` and ``vertices[i+1]``
    (cyclically); a 2-cycle therefore uses instances 0 and 1 of its pair.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]

    @property
    def key(self):
        return (tuple(sorted(self.vertices)), self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class CycleCover:
    cycles: tuple[Cycle, ...]
    covered: int

    @property
    def covered_count(self) -> int:
        return bin(self.covered).count("1")


def _cycle(vertices: tuple[int, ...]) -> Cycle:
    if len(vertices) == 2:
        u, v = vertices
        return Cycle(vertices, ((u, v, 0), (u, v, 1)))
    edges = []
    for i, u in enumerate(vertices):
        w = vertices[(i + 1) % len(vertices)]
        edges.append((min(u, w), max(u, w), 0))
    return Cycle(vertices, tuple(edges))


def all_cycles(M: Multigraph) -> list[Cycle]:
    """Every cycle of ``M`` (2-cycles on parallel pairs included), canonically oriented."""
    out = [_cycle((u, v)) for u, v, m in M.edge_list() if m >= 2]
    nbrs = [[v for v in range(M.n) if M.mult[u][v]] for u in range(M.n)]
    for s in range(M.n):
        path = [s]
        on_path = {s}

        def walk(u: int) -> None:
            for w in nbrs[u]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(_cycle(tuple(path)))
                elif w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    walk(w)
                    path.pop()
                    on_path.discard(w)

        walk(s)
    out.sort(key=lambda c: c.key)
    return out


def optimal_cycle_collection(M: Multigraph, max_vertices: int = MAX_PACKING_VERTICES) -> CycleCover:
    """Vertex-disjoint cycles maximising covered vertices, then the number of cycles.

    Remaining ties go to the lexicographically smallest sorted list of cycle
    keys.  Exhaustive packing, memoised on the set of still-free vertices.
    """
    if M.n > max_vertices:
        raise InstanceTooLargeError(f"cycle packing supports at most {max_vertices} vertices, got {M.n}")
    by_min: dict[int, list[tuple[int, Cycle]]] = {}
    for c in all_cycles(M):
        by_min.setdefault(c.vertices[0], []).append((bits_of(c.vertices), c))

    @lru_cache(maxsize=None)
    def best(free: int):
        # score = (-covered, -count, sorted keys); smaller is better
        if not free:
            return (0, 0, ()), ()
        v = (free & -free).bit_length() - 1
        score, chosen = best(free & ~(1 << v))
        for bits, c in by_min.get(v, ()):
            if bits & free != bits:
                continue
            sub_score, sub_chosen = best(free & ~bits)
            cand = (sub_score[0] - len(c), sub_score[1] - 1, (c.key,) + sub_score[2])
            if cand < score:
                score, chosen = cand, (c,) + sub_chosen
        return score, chosen

    _, cycles = best((1 << M.n) - 1)
    covered = 0
    for c in cycles:
        covered |= bits_of(c.vertices)
    return CycleCover(tuple(cycles), covered)


@dataclass(frozen=True)
class Layering:
    layers: tuple[int, ...]  # bit vectors over multigraph vertices

    def as_lists(self) -> list[list[int]]:
        return [list(iter_bits(b)) for b in self.layers]


def compute_layering(M: Multigraph, C: CycleCover) -> Layering:
    """First layer: covered vertices; each next layer: vertices with >= 2 edges into the earlier ones."""
    layers = [C.covered]
    done = C.covered
    full = (1 << M.n) - 1
    while done != full:
        nxt = 0
        for v in iter_bits(full & ~done):
            if sum(M.mult[v][u] for u in iter_bits(done)) >= 2:
                nxt |= 1 << v
        if not nxt:
            raise LayeringStalledError("no uncovered vertex has two edges into the layered part")
        layers.append(nxt)
        done |= nxt
    return Layering(tuple(layers))
