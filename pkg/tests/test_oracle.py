import pytest

from kpp.covers import max_triangle_free_cover
from kpp.graph import Graph, random_graph
from kpp.matching import SizeLimitError
from kpp.oracle import (
    brute_max_weight_cover,
    brute_triangle_free_cover,
    optimal_kpp,
    optimal_kppe,
    path_sets,
)
from kpp.builders import verify_partition
from kpp.structure import build_auxiliary_graph, saturation_weight
from kpp.pathcover import PathCycleCover
from helpers import complete_graph, cycle_graph, naive_min_partition, path_graph


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def test_path_graphs():
    assert optimal_kpp(path_graph(9), 9).num_paths == 1
    assert optimal_kpp(path_graph(10), 9).num_paths == 2


def test_edgeless():
    pp = optimal_kppe(Graph(5), 9)
    assert pp.num_edges == 0 and pp.num_paths == 5


def test_square():
    assert optimal_kppe(cycle_graph(4), 9).num_edges == 3


def test_empty_graph():
    assert optimal_kpp(Graph(0), 3).paths == []


@pytest.mark.parametrize("k", [3, 4, 9])
def test_petersen_matches_naive(k):
    g = petersen()
    pp = optimal_kpp(g, k)
    assert verify_partition(pp, g, k) == []
    assert pp.num_paths == naive_min_partition(g, k)


def test_path_sets_ends():
    ends = path_sets(path_graph(3), 3)
    assert ends[0b111] == 0b101
    assert 0b101 not in ends


@pytest.mark.parametrize("seed", range(200))
def test_partition_dp_matches_naive(seed):
    n = 3 + seed % 6
    g = random_graph(n, "gnp", seed, p=0.2 + (seed % 5) / 8)
    k = 2 + seed % 4
    pp = optimal_kpp(g, k)
    assert verify_partition(pp, g, k) == []
    assert pp.num_paths == naive_min_partition(g, k)


@pytest.mark.parametrize("seed", range(30))
def test_duality(seed):
    g = random_graph(10, "gnp", seed, p=0.3)
    assert optimal_kpp(g, 9).num_paths + optimal_kppe(g, 9).num_edges == g.n


def test_limits():
    with pytest.raises(SizeLimitError):
        optimal_kpp(path_graph(19), 9)
    with pytest.raises(SizeLimitError):
        brute_triangle_free_cover(path_graph(15))
    with pytest.raises(ValueError):
        optimal_kpp(path_graph(3), 0)


@pytest.mark.parametrize("g, edges", [(complete_graph(3), 2), (complete_graph(4), 4), (cycle_graph(4), 4),
                                      (complete_graph(5), 5), (Graph(3), 0)])
def test_brute_cover_examples(g, edges):
    cover = brute_triangle_free_cover(g)
    cover.validate(g)
    assert cover.num_edges == edges and cover.is_triangle_free()


def test_weighted_cover_examples():
    f_edges = [(0, 1), (1, 2), (2, 3), (0, 3)]
    g = Graph(5, f_edges + [(0, 4)])
    aux = build_auxiliary_graph(g, PathCycleCover.from_edges(5, f_edges))
    best = brute_max_weight_cover(aux, 0)
    assert best.edges == {(0, 4)}
    bare = build_auxiliary_graph(path_graph(4), PathCycleCover.from_edges(4, path_graph(4).edges))
    assert brute_max_weight_cover(bare, 0).num_edges == 0


@pytest.mark.parametrize("seed", range(60))
def test_weighted_cover_matches_pipeline(seed):
    from kpp.pipeline import approx1

    g = random_graph(8 + seed % 5, "planted_cover", seed, k=9)
    for k in (9, 11):
        a1 = approx1(g, k)
        if a1.aux.gprime.m > 24:
            continue
        best = brute_max_weight_cover(a1.aux, a1.eta)
        assert saturation_weight(a1.w.edges, a1.aux, a1.eta) == saturation_weight(best.edges, a1.aux, a1.eta)


@pytest.mark.parametrize("seed", range(40))
def test_cover_oracle_matches_exact_tier(seed):
    g = random_graph(6 + seed % 7, "cycles_plus_chords", seed)
    assert brute_triangle_free_cover(g).num_edges == max_triangle_free_cover(g, "exact").num_edges
