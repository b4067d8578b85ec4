"""Maximum path-cycle covers, with and without triangles allowed."""

from __future__ import annotations

import heapq
import os

from .factor import DegreeBounds, FactorInstance, max_weight_fg_factor
from .graph import Graph
from .matching import SizeLimitError, WeightedGraph
from .pathcover import PathCycleCover

DEFAULT_EXACT_THRESHOLD = 14


def exact_threshold() -> int:
    raw = os.environ.get("KPP_EXACT_THRESHOLD")
    if raw is None or raw.strip() == "":
        return DEFAULT_EXACT_THRESHOLD
    return int(raw)


def max_path_cycle_cover(g: Graph, forbidden=frozenset()) -> PathCycleCover:
    """Maximum-edge spanning subgraph with all degrees at most two."""
    edges = [e for e in g.sorted_edges() if e not in forbidden]
    wg = WeightedGraph(Graph(g.n, edges), {e: 1 for e in edges})
    sol = max_weight_fg_factor(FactorInstance(wg, DegreeBounds.uniform(g.n, 0, 2)))
    return PathCycleCover.from_edges(g.n, sol)


def _first_triangle(cover: PathCycleCover):
    for c in cover.components:
        if c.is_cycle and c.size == 3:
            return c
    return None


def _exact_triangle_free(g: Graph) -> PathCycleCover:
    # Best-first branch and bound.  The relaxation is a maximum path-cycle cover
    # avoiding the forbidden edges; a triangle in it is broken by forbidding one
    # of its three edges in turn (a triangle-free cover misses at least one).
    root = max_path_cycle_cover(g)
    if _first_triangle(root) is None:
        return root
    counter = 0
    heap = [(-root.num_edges, counter, frozenset(), root)]
    seen = {frozenset()}
    best = None
    while heap:
        neg, _, forb, cover = heapq.heappop(heap)
        if best is not None and -neg <= best.num_edges:
            break
        tri = _first_triangle(cover)
        if tri is None:
            best = cover
            break
        for e in tri.edges():
            nf = forb | {e}
            if nf in seen:
                continue
            seen.add(nf)
            child = max_path_cycle_cover(g, nf)
            if best is not None and child.num_edges <= best.num_edges:
                continue
            counter += 1
            heapq.heappush(heap, (-child.num_edges, counter, nf, child))
    assert best is not None
    return best


def _heuristic_triangle_free(g: Graph) -> PathCycleCover:
    cover = max_path_cycle_cover(g)
    edges = set(cover.edges)
    for c in cover.components:
        if c.is_cycle and c.size == 3:
            edges.discard(min(c.edges()))
    # one greedy pass adding edges that keep degree <= 2 and never close a short cycle
    deg = [0] * g.n
    parent = list(range(g.n))
    size = [1] * g.n

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            size[rv] += size[ru]
    for u, v in g.sorted_edges():
        if (u, v) in edges or deg[u] >= 2 or deg[v] >= 2:
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            # both are path ends of one path; closing it is fine once it has >= 4 vertices
            if size[ru] < 4:
                continue
        else:
            parent[ru] = rv
            size[rv] += size[ru]
        edges.add((u, v))
        deg[u] += 1
        deg[v] += 1
    return PathCycleCover.from_edges(g.n, edges)


def max_triangle_free_cover(g: Graph, mode: str = "exact", threshold: int | None = None) -> PathCycleCover:
    """Triangle-free path-cycle cover.

    ``exact`` returns one with the maximum number of edges and refuses graphs
    above ``threshold`` vertices; ``heuristic`` guarantees triangle-freeness only.
    """
    if threshold is None:
        threshold = exact_threshold()
    if mode == "exact":
        if g.n > threshold:
            raise SizeLimitError(f"exact cover tier limited to {threshold} vertices, got {g.n}")
        return _exact_triangle_free(g)
    if mode == "heuristic":
        return _heuristic_triangle_free(g)
    raise ValueError(f"unknown cover mode {mode!r}")


def resolve_tier(tier: str, n: int, threshold: int | None = None) -> str:
    if threshold is None:
        threshold = exact_threshold()
    if tier == "auto":
        return "exact" if n <= threshold else "heuristic"
    if tier not in ("exact", "heuristic"):
        raise ValueError(f"unknown tier {tier!r}")
    return tier

