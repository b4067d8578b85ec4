import random

import pytest

from kpp.graph import Graph
from kpp.matching import (
    SizeLimitError,
    WeightedGraph,
    brute_force_matching,
    is_matching,
    max_weight_matching,
)
from helpers import cycle_graph


def random_weighted(n, seed, p=0.5, wmax=9):
    rng = random.Random(seed)
    es = [(u, v, rng.randint(0, wmax)) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return WeightedGraph.from_edges(n, es)


def test_triangle_takes_heaviest():
    wg = WeightedGraph.from_edges(3, [(0, 1, 5), (1, 2, 3), (0, 2, 1)])
    m = max_weight_matching(wg)
    assert m.edges == {(0, 1)} and m.weight == 5


def test_four_cycle_unit():
    wg = WeightedGraph(cycle_graph(4), {e: 1 for e in cycle_graph(4).edges})
    assert max_weight_matching(wg).weight == 2


def test_weight_not_cardinality():
    # path 1-9-1: the single middle edge beats the two outer ones
    wg = WeightedGraph.from_edges(4, [(0, 1, 1), (1, 2, 9), (2, 3, 1)])
    assert max_weight_matching(wg).weight == 9
    assert brute_force_matching(wg).weight == 9


def test_brute_small_cases():
    assert brute_force_matching(WeightedGraph.from_edges(2, [(0, 1, 4)])).weight == 4
    empty = brute_force_matching(WeightedGraph(Graph(3), {}))
    assert empty.weight == 0 and not empty.edges


def test_brute_guard():
    with pytest.raises(SizeLimitError):
        brute_force_matching(WeightedGraph(Graph(17), {}))


def test_weights_validated():
    with pytest.raises(ValueError):
        WeightedGraph.from_edges(2, [(0, 1, -1)])
    with pytest.raises(ValueError):
        WeightedGraph(Graph(3, [(0, 1)]), {(1, 2): 3})


def test_random_seed7_matches_brute():
    wg = random_weighted(8, 7)
    assert max_weight_matching(wg).weight == brute_force_matching(wg).weight


@pytest.mark.parametrize("seed", range(150))
def test_matches_brute_force(seed):
    wg = random_weighted(2 + seed % 9, seed, p=0.3 + (seed % 5) / 10)
    m = max_weight_matching(wg)
    assert is_matching(m.edges)
    assert m.weight == sum(wg.weight[e] for e in m.edges)
    assert m.weight == brute_force_matching(wg).weight


@pytest.mark.parametrize("seed", range(40))
def test_doubling_weights(seed):
    wg = random_weighted(7, 1000 + seed)
    doubled = WeightedGraph(wg.base, {e: 2 * w for e, w in wg.weight.items()})
    m = max_weight_matching(doubled)
    assert m.weight == 2 * brute_force_matching(wg).weight
    # the doubled optimum is optimal for the original weights too
    assert sum(wg.weight[e] for e in m.edges) == brute_force_matching(wg).weight
