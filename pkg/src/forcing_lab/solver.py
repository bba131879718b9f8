"""Exact forcing number and total forcing number by staged exhaustive search.

Cardinalities ``k = 1, 2, ...`` are tried in order and, inside a stage, the
``k``-subsets are visited in lexicographic order, so the first success is the
lexicographically smallest minimum witness.  A stage is split into blocks by
the subset's smallest element; in lexicographic order each such block is a
contiguous run of ranks, so blocks can be searched by independent workers and
reduced by taking the lowest successful block.

``subsets_tested`` counts closure evaluations that a sequential scan performs
before stopping, which keeps it identical for any worker count.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import InstanceTooLargeError, PreconditionError
from .forcing import ForcingTrace, closure_bits, forcing_closure
from .graph import SimpleGraph, VertexSet, bits_of

log = logging.getLogger(__name__)

SOFT_LIMIT = 24
MEMO_CAP = 1 << 20


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: VertexSet
    trace: ForcingTrace
    subsets_tested: int
    total: bool

    def to_json(self) -> dict:
        return {"value": self.value, "witness": self.witness.to_list(), "subsets_tested": self.subsets_tested}


def default_workers() -> int:
    raw = os.environ.get("FORCING_LAB_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _check_size(G: SimpleGraph, force: bool) -> None:
    if G.n > SOFT_LIMIT and not force:
        raise InstanceTooLargeError(
            f"n={G.n} exceeds the exhaustive-search soft limit of {SOFT_LIMIT}; pass force=True to override"
        )


def _plain_subsets(n: int, k: int, first: int) -> Iterator[tuple[int, ...]]:
    for rest in combinations(range(first + 1, n), k - 1):
        yield (first,) + rest


def _isolate_free_subsets(G: SimpleGraph, k: int, first: int) -> Iterator[tuple[int, ...]]:
    """Lexicographic ``k``-subsets with smallest element ``first`` inducing no isolated vertex.

    A chosen vertex with no chosen neighbour whose largest neighbour is already
    behind the insertion point can never be rescued, so that branch is cut.
    """
    n = G.n
    masks = G.masks
    top = [max(a) if a else -1 for a in G.adj]
    chosen = [first]

    def extend(bits: int, start: int) -> Iterator[tuple[int, ...]]:
        need = k - len(chosen)
        if need == 0:
            if not any(not masks[v] & bits for v in chosen):
                yield tuple(chosen)
            return
        for x in range(start, n - need + 1):
            if any(not masks[v] & bits and top[v] < x for v in chosen):
                return  # every later x leaves that vertex isolated too
            nb = bits | 1 << x
            if not masks[x] & nb and top[x] <= x:
                continue
            chosen.append(x)
            yield from extend(nb, x + 1)
            chosen.pop()

    yield from extend(1 << first, first + 1)


def _search_block(G: SimpleGraph, k: int, first: int, total: bool) -> tuple[tuple[int, ...] | None, int]:
    """Scan one block; return the first witness (or None) and closures evaluated."""
    full = (1 << G.n) - 1
    masks = G.masks
    stalled: set[int] = set()
    tested = 0
    subsets = _isolate_free_subsets(G, k, first) if total else _plain_subsets(G.n, k, first)
    for subset in subsets:
        tested += 1
        final = closure_bits(masks, bits_of(subset), stalled)
        if final == full:
            return subset, tested
        if len(stalled) < MEMO_CAP:
            stalled.add(final)
    return None, tested


def _search_block_star(args):
    return _search_block(*args)


def _solve(G: SimpleGraph, total: bool, workers: int | None, force: bool) -> SolveResult:
    _check_size(G, force)
    if G.n == 0:
        raise PreconditionError("empty graph")
    if total and any(not a for a in G.adj):
        raise PreconditionError("total forcing sets need a graph without isolated vertices")
    workers = default_workers() if workers is None else max(1, workers)
    tested = 0
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for k in range(1, G.n + 1):
            blocks = [(G, k, first, total) for first in range(G.n - k + 1)]
            if pool is None:
                results = map(_search_block_star, blocks)
            else:
                results = pool.map(_search_block_star, blocks)
            for subset, count in results:
                tested += count
                if subset is not None:
                    witness = VertexSet.of(G.n, subset)
                    trace = forcing_closure(G, witness).trace
                    log.debug("k=%d witness=%s tested=%d", k, subset, tested)
                    return SolveResult(k, witness, trace, tested, total)
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    raise AssertionError("the full vertex set always forces")  # pragma: no cover


def forcing_number(G: SimpleGraph, *, workers: int | None = None, force: bool = False) -> SolveResult:
    """Exact F(G) with the lexicographically smallest minimum forcing set."""
    return _solve(G, False, workers, force)


def total_forcing_number(G: SimpleGraph, *, workers: int | None = None, force: bool = False) -> SolveResult:
    """Exact F_t(G); only isolate-free candidate sets are closure-tested."""
    return _solve(G, True, workers, force)


def verify_observation1(G: SimpleGraph, *, workers: int | None = None, force: bool = False) -> tuple[int, int, bool]:
    f = forcing_number(G, workers=workers, force=force).value
    ft = total_forcing_number(G, workers=workers, force=force).value
    return f, ft, f <= ft <= 2 * f
