from __future__ import annotations

import random
from itertools import combinations

import pytest
from oracles import naive_min

from forcing_lab.errors import InstanceTooLargeError, PreconditionError
from forcing_lab.families import complete_graph, diamond_necklace, prism
from forcing_lab.forcing import is_forcing_set, is_total_forcing_set
from forcing_lab.graph import SimpleGraph
from forcing_lab.solver import (
    SOFT_LIMIT,
    default_workers,
    forcing_number,
    total_forcing_number,
    verify_observation1,
)


def random_connected(rng: random.Random, n: int) -> SimpleGraph:
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for u, v in combinations(range(n), 2):
        if rng.random() < 0.25:
            edges.add((u, v))
    return SimpleGraph(n, sorted(edges))


@pytest.mark.parametrize("seed", range(25))
def test_matches_naive_search(seed):
    rng = random.Random(seed)
    G = random_connected(rng, rng.randint(2, 8))
    assert forcing_number(G, workers=1).value == naive_min(G, total=False)
    assert total_forcing_number(G, workers=1).value == naive_min(G, total=True)


def test_witnesses_are_valid_and_minimal(corpus_no_k4):
    for G in corpus_no_k4:
        if G.n > 12:
            continue
        f = forcing_number(G, workers=1)
        ft = total_forcing_number(G, workers=1)
        assert is_forcing_set(G, f.witness) and is_total_forcing_set(G, ft.witness)
        assert len(f.witness) == f.value and len(ft.witness) == ft.value
        # staged search is complete: nothing one smaller works
        assert not any(is_forcing_set(G, S) for S in combinations(range(G.n), f.value - 1))
        assert not any(is_total_forcing_set(G, S) for S in combinations(range(G.n), ft.value - 1))


@pytest.mark.parametrize("k", [2, 3])
def test_worker_count_does_not_change_result(k):
    G, _ = diamond_necklace(k)
    for solve in (forcing_number, total_forcing_number):
        one, two = solve(G, workers=1), solve(G, workers=2)
        assert one.to_json() == two.to_json()


def test_small_values():
    assert forcing_number(complete_graph(4)).value == 3
    assert verify_observation1(prism()) == (3, 3, True)


def test_soft_limit():
    G = SimpleGraph(SOFT_LIMIT + 1, [(v, v + 1) for v in range(SOFT_LIMIT)])
    with pytest.raises(InstanceTooLargeError):
        forcing_number(G)
    # a path is forced from one end, so lifting the limit is cheap here
    assert forcing_number(G, force=True).value == 1


def test_total_rejects_isolated_vertex():
    with pytest.raises(PreconditionError):
        total_forcing_number(SimpleGraph(3, [(0, 1)]))


def test_env_default_workers(monkeypatch):
    monkeypatch.setenv("FORCING_LAB_WORKERS", "3")
    assert default_workers() == 3
    monkeypatch.setenv("FORCING_LAB_WORKERS", "junk")
    assert default_workers() == 1


def test_json_shape():
    js = forcing_number(prism()).to_json()
    assert set(js) == {"value", "witness", "subsets_tested"}
    assert js["value"] == len(js["witness"]) == 3
