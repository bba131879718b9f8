"""The forcing (zero forcing) colour-change process.

A coloured vertex with exactly one uncoloured neighbour forces that neighbour
to become coloured.  :func:`forcing_closure` applies one force per step and
always picks the valid pair with the smallest forcer index, so traces are
reproducible.  The final coloured set does not depend on that choice.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graph import SimpleGraph, VertexLike, VertexSet, iter_bits


@dataclass(frozen=True)
class ForcingTrace:
    steps: tuple[tuple[int, int], ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def replay(self, G: SimpleGraph, initial: VertexLike) -> VertexSet:
        """Re-apply the steps from ``initial``, checking each one is a legal force.

        Raises ValueError on the first illegal step.
        """
        colored = G.vertex_set(initial).bits
        for i, (u, w) in enumerate(self.steps):
            if not colored >> u & 1:
                raise ValueError(f"step {i}: forcer {u} is not coloured")
            if colored >> w & 1:
                raise ValueError(f"step {i}: vertex {w} already coloured")
            if G.masks[u] & ~colored != 1 << w:
                raise ValueError(f"step {i}: {w} is not the unique uncoloured neighbour of {u}")
            colored |= 1 << w
        return VertexSet(G.n, colored)

    def to_json(self) -> list[list[int]]:
        return [[u, w] for u, w in self.steps]


@dataclass(frozen=True)
class ClosureResult:
    initial: VertexSet
    colored: VertexSet
    trace: ForcingTrace
    complete: bool

    def to_json(self) -> dict:
        return {
            "n": self.colored.n,
            "initial": self.initial.to_list(),
            "steps": self.trace.to_json(),
            "complete": self.complete,
        }


def forcing_closure(G: SimpleGraph, S: VertexLike) -> ClosureResult:
    initial = G.vertex_set(S)
    colored = initial.bits
    masks = G.masks
    uncolored_deg = [bin(masks[v] & ~colored).count("1") for v in range(G.n)]
    heap = [v for v in iter_bits(colored) if uncolored_deg[v] == 1]
    heapq.heapify(heap)
    steps = []
    while heap:
        u = heapq.heappop(heap)
        if uncolored_deg[u] != 1:
            continue  # its last uncoloured neighbour was forced by someone else
        w = (masks[u] & ~colored).bit_length() - 1
        colored |= 1 << w
        steps.append((u, w))
        for x in G.adj[w]:
            uncolored_deg[x] -= 1
            if uncolored_deg[x] == 1 and colored >> x & 1:
                heapq.heappush(heap, x)
        if uncolored_deg[w] == 1:
            heapq.heappush(heap, w)
    full = (1 << G.n) - 1
    return ClosureResult(initial, VertexSet(G.n, colored), ForcingTrace(tuple(steps)), colored == full)


def closure_bits(masks: tuple[int, ...], bits: int, stalled: set[int] | None = None) -> int:
    """Final coloured set of ``bits`` as a bit vector, without a trace.

    This is the solver's inner loop.  ``stalled`` optionally holds closures
    already known to be final: reaching one of them ends the computation.
    """
    colored = bits
    live = list(iter_bits(bits))
    while True:
        before = colored
        keep = []
        for v in live:
            rest = masks[v] & ~colored
            if not rest:
                continue
            if rest & (rest - 1):
                keep.append(v)
            else:
                colored |= rest
                keep.append(rest.bit_length() - 1)
        if colored == before:
            return colored
        if stalled is not None and colored in stalled:
            return colored
        live = keep


def is_forcing_set(G: SimpleGraph, S: VertexLike) -> bool:
    bits = G.vertex_set(S).bits
    return closure_bits(G.masks, bits) == (1 << G.n) - 1


def is_total_forcing_set(G: SimpleGraph, S: VertexLike) -> bool:
    bits = G.vertex_set(S).bits
    if G.induced_has_isolated(bits):
        return False
    return closure_bits(G.masks, bits) == (1 << G.n) - 1
