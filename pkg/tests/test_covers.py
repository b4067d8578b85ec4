import pytest

from kpp.covers import (
    DEFAULT_EXACT_THRESHOLD,
    exact_threshold,
    max_path_cycle_cover,
    max_triangle_free_cover,
    resolve_tier,
)
from kpp.graph import Graph, random_graph
from kpp.matching import SizeLimitError
from kpp.oracle import brute_triangle_free_cover
from kpp.pathcover import CoverError, PathCycleCover
from helpers import complete_graph, cycle_graph, path_graph


def test_k4_cover_has_four_edges():
    assert max_path_cycle_cover(complete_graph(4)).num_edges == 4


def test_claw_cover_has_two_edges():
    claw = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert max_path_cycle_cover(claw).num_edges == 2


def test_triangle_free_on_triangle():
    cover = max_triangle_free_cover(cycle_graph(3))
    assert cover.num_edges == 2 and cover.is_triangle_free()


def test_two_triangles_joined():
    # bowtie-free: two triangles joined by an edge form a 6-vertex Hamiltonian path
    g = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    assert max_triangle_free_cover(g).num_edges == 5


def test_k5_is_hamiltonian():
    assert max_triangle_free_cover(complete_graph(5)).num_edges == 5


def test_forbidden_edges_respected():
    cover = max_path_cycle_cover(cycle_graph(4), forbidden=frozenset({(0, 1)}))
    assert (0, 1) not in cover.edges and cover.num_edges == 3


def test_exact_refuses_large_graphs():
    with pytest.raises(SizeLimitError):
        max_triangle_free_cover(path_graph(20), "exact", threshold=10)


def test_threshold_from_environment(monkeypatch):
    monkeypatch.delenv("KPP_EXACT_THRESHOLD", raising=False)
    assert exact_threshold() == DEFAULT_EXACT_THRESHOLD
    monkeypatch.setenv("KPP_EXACT_THRESHOLD", "6")
    assert exact_threshold() == 6
    assert resolve_tier("auto", 7) == "heuristic"
    assert resolve_tier("auto", 6) == "exact"


def test_resolve_tier_rejects_unknown():
    with pytest.raises(ValueError):
        resolve_tier("fast", 3)
    with pytest.raises(ValueError):
        max_triangle_free_cover(path_graph(3), "fast")


@pytest.mark.parametrize("seed", range(80))
def test_exact_cover_matches_enumeration(seed):
    g = random_graph(5 + seed % 7, "gnp", seed, p=0.25 + (seed % 4) / 8)
    cover = max_triangle_free_cover(g, "exact")
    cover.validate(g)
    assert cover.is_triangle_free()
    assert cover.num_edges == brute_triangle_free_cover(g).num_edges


@pytest.mark.parametrize("seed", range(40))
def test_heuristic_cover_is_valid(seed):
    g = random_graph(30, "gnp", seed, p=0.15)
    cover = max_triangle_free_cover(g, "heuristic")
    cover.validate(g)
    assert cover.is_triangle_free()
    assert cover.num_edges <= max_path_cycle_cover(g).num_edges


def test_pathcover_rejects_bad_degree():
    with pytest.raises(CoverError):
        PathCycleCover.from_edges(4, [(0, 1), (0, 2), (0, 3)])


def test_pathcover_components():
    cover = PathCycleCover.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (5, 4)])
    kinds = sorted((c.is_cycle, c.size) for c in cover.components)
    assert kinds == [(False, 1), (False, 2), (True, 4)]
    assert cover.num_edges == 5
