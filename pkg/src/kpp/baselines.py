"""Two simple uncertified baselines for benchmarking."""

from __future__ import annotations

from .builders import PathPartition, cut_to_kpp
from .covers import max_triangle_free_cover
from .graph import Graph
from .matching import WeightedGraph, max_weight_matching


def cover_and_cut(g: Graph, k: int, tier: str = "heuristic", threshold=None) -> PathPartition:
    """Cut every component of a triangle-free cover into k^- paths."""
    f = max_triangle_free_cover(g, tier, threshold)
    out = PathPartition([], k)
    for comp in f.components:
        out.extend(cut_to_kpp(comp.order, k, cycle=comp.is_cycle))
    return out


def matching_then_join(g: Graph, k: int) -> PathPartition:
    """Start from a maximum matching, then glue path ends greedily while paths stay short."""
    m = max_weight_matching(WeightedGraph(g, {e: 1 for e in g.edges}))
    paths = [list(e) for e in sorted(m.edges)]
    covered = {v for e in m.edges for v in e}
    paths += [[v] for v in range(g.n) if v not in covered]
    owner = {}
    for i, p in enumerate(paths):
        owner[p[0]] = i
        owner[p[-1]] = i
    alive = set(range(len(paths)))
    for u, v in g.sorted_edges():
        i, j = owner.get(u), owner.get(v)
        if i is None or j is None or i == j or i not in alive or j not in alive:
            continue
        a, b = paths[i], paths[j]
        if len(a) + len(b) > k:
            continue
        if a[-1] != u:
            a.reverse()
        if b[0] != v:
            b.reverse()
        for x in (a[0], a[-1], b[0], b[-1]):
            owner.pop(x, None)
        merged = a + b
        paths[i] = merged
        alive.discard(j)
        owner[merged[0]] = i
        owner[merged[-1]] = i
    return PathPartition([tuple(paths[i]) for i in sorted(alive)], k)
