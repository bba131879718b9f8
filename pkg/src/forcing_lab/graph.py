"""Immutable simple graphs, loopless multigraphs and bitset vertex sets.

Vertices are the dense integers ``0..n-1``.  Sets of vertices are carried as
Python integers used as bit vectors (bit ``v`` set means ``v`` is present);
:class:`VertexSet` wraps such an integer together with its universe size.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Union

from .errors import DuplicateEdgeError, GraphError, LoopEdgeError, VertexOutOfRangeError

VertexLike = Union["VertexSet", Iterable[int]]


def bits_of(vertices: Iterable[int]) -> int:
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the set bit positions of ``bits`` in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@dataclass(frozen=True)
class VertexSet:
    """A fixed-width bit vector over ``0..n-1``."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.n:
            raise VertexOutOfRangeError(f"bits {self.bits:#x} exceed universe of size {self.n}")

    @classmethod
    def of(cls, n: int, vertices: VertexLike) -> "VertexSet":
        if isinstance(vertices, VertexSet):
            if vertices.n != n:
                raise GraphError(f"vertex set over {vertices.n} vertices used with n={n}")
            return vertices
        vertices = list(vertices)
        for v in vertices:
            if not 0 <= v < n:
                raise VertexOutOfRangeError(f"vertex {v} not in 0..{n - 1}")
        return cls(n, bits_of(vertices))

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.bits >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.bits | self._other_bits(other))

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.bits & self._other_bits(other))

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.bits & ~self._other_bits(other))

    def __invert__(self) -> "VertexSet":
        return VertexSet(self.n, ~self.bits & ((1 << self.n) - 1))

    def __le__(self, other: "VertexSet") -> bool:
        return self.bits & ~self._other_bits(other) == 0

    def _other_bits(self, other: "VertexSet") -> int:
        if other.n != self.n:
            raise GraphError("vertex sets over different universes")
        return other.bits

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"VertexSet(n={self.n}, {self.to_list()})"


def _normalize_edges(n: int, edges: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    seen: set[tuple[int, int]] = set()
    out = []
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRangeError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise LoopEdgeError(f"loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"edge {key} given twice")
        seen.add(key)
        out.append(key)
    return out


class SimpleGraph:
    """Immutable undirected simple graph on ``0..n-1``.

    ``adj[v]`` is the sorted tuple of neighbours of ``v`` and ``masks[v]`` the
    same neighbourhood as a bit vector.  Edits return new graphs.
    """

    __slots__ = ("n", "adj", "masks", "edge_count")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("negative vertex count")
        pairs = _normalize_edges(n, edges)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in pairs:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.n = n
        self.adj = tuple(tuple(sorted(x)) for x in nbrs)
        self.masks = tuple(bits_of(x) for x in self.adj)
        self.edge_count = len(pairs)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def vertex_set(self, vertices: VertexLike) -> VertexSet:
        return VertexSet.of(self.n, vertices)

    def induced_has_isolated(self, bits: int) -> bool:
        """True if some vertex of ``bits`` has no neighbour inside ``bits``."""
        masks = self.masks
        return any(not masks[v] & bits for v in iter_bits(bits))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimpleGraph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.edge_count})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
    return SimpleGraph(n, edges)


def is_cubic(G: SimpleGraph) -> bool:
    return all(len(a) == 3 for a in G.adj)


def is_claw_free(G: SimpleGraph) -> bool:
    """No vertex has three pairwise non-adjacent neighbours."""
    for v in range(G.n):
        for x, y, z in combinations(G.adj[v], 3):
            if not (G.has_edge(x, y) or G.has_edge(x, z) or G.has_edge(y, z)):
                return False
    return True


def is_connected(G: SimpleGraph) -> bool:
    if G.n <= 1:
        return True
    seen = 1
    queue = deque([0])
    while queue:
        v = queue.popleft()
        fresh = G.masks[v] & ~seen
        seen |= fresh
        queue.extend(iter_bits(fresh))
    return seen == (1 << G.n) - 1


def delete_vertices(G: SimpleGraph, X: VertexLike) -> tuple[SimpleGraph, dict[int, int]]:
    """Return ``G - X`` compacted to ``0..n-|X|-1`` and the old-to-new index map."""
    removed = G.vertex_set(X).bits
    relabel: dict[int, int] = {}
    for v in range(G.n):
        if not removed >> v & 1:
            relabel[v] = len(relabel)
    edges = [(relabel[u], relabel[v]) for u, v in G.edges() if u in relabel and v in relabel]
    return SimpleGraph(len(relabel), edges), relabel


def add_edges(G: SimpleGraph, pairs: Iterable[tuple[int, int]]) -> SimpleGraph:
    pairs = list(pairs)
    for u, v in pairs:
        if 0 <= u < G.n and 0 <= v < G.n and u != v and G.has_edge(u, v):
            raise DuplicateEdgeError(f"edge ({u}, {v}) already present")
    return SimpleGraph(G.n, G.edges() + pairs)


class Multigraph:
    """Immutable loopless undirected multigraph given by a multiplicity matrix."""

    __slots__ = ("n", "mult")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]] = ()):
        mult = [[0] * n for _ in range(n)]
        for u, v, m in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRangeError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise LoopEdgeError(f"loop at vertex {u}")
            if m < 0:
                raise GraphError("negative multiplicity")
            mult[u][v] += m
            mult[v][u] += m
        self.n = n
        self.mult = tuple(tuple(row) for row in mult)

    @classmethod
    def from_matrix(cls, matrix) -> "Multigraph":
        n = len(matrix)
        for u in range(n):
            if matrix[u][u]:
                raise LoopEdgeError(f"loop at vertex {u}")
            for v in range(n):
                if matrix[u][v] != matrix[v][u]:
                    raise GraphError("multiplicity matrix is not symmetric")
        return cls(n, [(u, v, matrix[u][v]) for u in range(n) for v in range(u + 1, n) if matrix[u][v]])

    def degree(self, v: int) -> int:
        return sum(self.mult[v])

    def is_cubic(self) -> bool:
        return all(self.degree(v) == 3 for v in range(self.n))

    def edge_list(self) -> list[tuple[int, int, int]]:
        """``(u, v, mult)`` for every unordered pair with ``u < v`` and ``mult > 0``."""
        return [(u, v, self.mult[u][v]) for u in range(self.n) for v in range(u + 1, self.n) if self.mult[u][v]]

    def edge_instances(self) -> list[tuple[int, int, int]]:
        """Each parallel edge as a distinct ``(u, v, index)`` with ``u < v``."""
        return [(u, v, i) for u, v, m in self.edge_list() for i in range(m)]

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in range(self.n):
                if self.mult[u][v] and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.n

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Multigraph) and self.mult == other.mult

    def __hash__(self) -> int:
        return hash(self.mult)

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, edges={self.edge_list()})"
