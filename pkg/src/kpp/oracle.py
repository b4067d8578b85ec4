"""Exponential-time ground truth for small graphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .builders import PathPartition
from .matching import SizeLimitError
from .pathcover import PathCycleCover
from .structure import AuxiliaryGraph, saturation_weight


@dataclass(frozen=True)
class OracleLimits:
    partition: int = 18
    cover: int = 14
    matching: int = 16
    weighted_cover_edges: int = 24


LIMITS = OracleLimits()


def _bitadj(g) -> list[int]:
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def path_sets(g, k: int) -> dict[int, int]:
    """Map each vertex set (bitmask) of size <= k that has a Hamiltonian path to its end set.

    ``ends[mask]`` is a bitmask of the vertices where some Hamiltonian path of
    G[mask] can end.  Sets are grown one vertex at a time from singletons.
    """
    adj = _bitadj(g)
    ends: dict[int, int] = {1 << v: 1 << v for v in range(g.n)}
    frontier = list(ends)
    size = 1
    while frontier and size < k:
        nxt: dict[int, int] = {}
        for mask in frontier:
            e = ends[mask]
            while e:
                low = e & -e
                v = low.bit_length() - 1
                e ^= low
                ext = adj[v] & ~mask
                while ext:
                    b = ext & -ext
                    ext ^= b
                    nm = mask | b
                    nxt[nm] = nxt.get(nm, 0) | b
        for nm, e in nxt.items():
            ends[nm] = ends.get(nm, 0) | e
        frontier = list(nxt)
        size += 1
    return ends


def _witness(g, mask: int) -> tuple[int, ...]:
    """A Hamiltonian path of G[mask] (mask known to have one)."""
    verts = [v for v in range(g.n) if mask >> v & 1]
    adj = _bitadj(g)

    @lru_cache(maxsize=None)
    def reach(m: int, end: int) -> bool:
        if m == 1 << end:
            return True
        rest = m ^ (1 << end)
        return any(rest >> u & 1 and adj[u] >> end & 1 and reach(rest, u) for u in verts)

    for end in verts:
        if reach(mask, end):
            path = [end]
            m = mask
            while m != 1 << path[-1]:
                cur = path[-1]
                rest = m ^ (1 << cur)
                nxt = next(u for u in verts if rest >> u & 1 and adj[u] >> cur & 1 and reach(rest, u))
                path.append(nxt)
                m = rest
            path.reverse()
            return tuple(path) if path[0] <= path[-1] else tuple(path[::-1])
    raise ValueError("mask has no Hamiltonian path")


def _min_partition(g, k: int, limit: int) -> list[int]:
    if g.n > limit:
        raise SizeLimitError(f"partition oracle limited to {limit} vertices, got {g.n}")
    if g.n == 0:
        return []
    ends = path_sets(g, k)
    by_low: dict[int, list[int]] = {}
    for mask in sorted(ends, key=lambda m: (-bin(m).count("1"), m)):
        low = (mask & -mask).bit_length() - 1
        by_low.setdefault(low, []).append(mask)

    @lru_cache(maxsize=None)
    def best(mask: int) -> tuple[int, tuple]:
        if mask == 0:
            return 0, ()
        if mask in ends:
            return 1, (mask,)
        low = (mask & -mask).bit_length() - 1
        top = None
        for s in by_low[low]:
            if s & mask != s:
                continue
            cnt, parts = best(mask ^ s)
            if top is None or cnt + 1 < top[0]:
                top = (cnt + 1, (s,) + parts)
                if top[0] == 2:
                    break
        return top

    return list(best((1 << g.n) - 1)[1])


def optimal_kpp(g, k: int, limit: int | None = None) -> PathPartition:
    """A k-path partition with the fewest paths."""
    if k < 1:
        raise ValueError("k must be positive")
    masks = _min_partition(g, k, LIMITS.partition if limit is None else limit)
    return PathPartition(sorted(_witness(g, m) for m in masks), k)


def optimal_kppe(g, k: int, limit: int | None = None) -> PathPartition:
    """A k-path partition with the most edges (the same partition, by paths + edges = n)."""
    pp = optimal_kpp(g, k, limit)
    assert pp.num_paths + pp.num_edges == g.n
    return pp


def brute_triangle_free_cover(g, limit: int | None = None) -> PathCycleCover:
    """Maximum-edge triangle-free path-cycle cover by pruned edge enumeration."""
    limit = LIMITS.cover if limit is None else limit
    if g.n > limit:
        raise SizeLimitError(f"cover oracle limited to {limit} vertices, got {g.n}")
    edges = g.sorted_edges()
    n = g.n
    # remaining[i][v]: edges at index >= i incident to v
    remaining = [[0] * n for _ in range(len(edges) + 1)]
    for i in range(len(edges) - 1, -1, -1):
        row = remaining[i + 1][:]
        u, v = edges[i]
        row[u] += 1
        row[v] += 1
        remaining[i] = row
    deg = [0] * n
    partner = list(range(n))  # other end of the path through an end vertex
    size = [1] * n  # path order, valid at path ends
    chosen: list = []
    best: list = [[]]

    def bound(i: int) -> int:
        cap = sum(min(2 - deg[v], remaining[i][v]) for v in range(n))
        return len(chosen) + min(cap // 2, len(edges) - i)

    def go(i: int) -> None:
        if len(chosen) > len(best[0]):
            best[0] = chosen[:]
        if i == len(edges) or bound(i) <= len(best[0]):
            return
        u, v = edges[i]
        if deg[u] < 2 and deg[v] < 2:
            if partner[u] == v:
                if size[u] >= 4:
                    # closes a cycle of order >= 4
                    deg[u] += 1
                    deg[v] += 1
                    chosen.append((u, v))
                    saved = (partner[u], partner[v])
                    partner[u], partner[v] = -1, -1
                    go(i + 1)
                    partner[u], partner[v] = saved
                    chosen.pop()
                    deg[u] -= 1
                    deg[v] -= 1
            elif partner[u] >= 0 and partner[v] >= 0:
                a, b = partner[u], partner[v]
                saved = (partner[a], partner[b], size[a], size[b], partner[u], partner[v])
                total = size[u] + size[v]
                partner[a], partner[b] = b, a
                size[a] = size[b] = total
                if deg[u] == 1:
                    partner[u] = -1
                if deg[v] == 1:
                    partner[v] = -1
                deg[u] += 1
                deg[v] += 1
                chosen.append((u, v))
                go(i + 1)
                chosen.pop()
                deg[u] -= 1
                deg[v] -= 1
                partner[a], partner[b], size[a], size[b] = saved[:4]
                partner[u], partner[v] = saved[4], saved[5]
        go(i + 1)

    go(0)
    return PathCycleCover.from_edges(n, best[0])


def brute_max_weight_cover(aux: AuxiliaryGraph, eta: int, limit: int | None = None) -> PathCycleCover:
    """Degree-<=2 edge set of G' with maximum saturation weight (exhaustive)."""
    limit = LIMITS.weighted_cover_edges if limit is None else limit
    edges = aux.gprime.sorted_edges()
    if len(edges) > limit:
        raise SizeLimitError(f"weighted cover oracle limited to {limit} edges, got {len(edges)}")
    n = aux.gprime.n
    value = [1 if len(c) == 4 else eta for c in aux.short_cycles]

    def touched(e):
        return {aux.membership[x] for x in e} - {None}

    ceiling = sum(value[i] for i in set().union(*(touched(e) for e in edges))) if edges else 0
    deg = [0] * n
    hits = [0] * len(aux.short_cycles)
    chosen: list = []
    best = [0, []]

    def current() -> int:
        return sum(value[i] for i, h in enumerate(hits) if h)

    def go(i: int) -> bool:
        w = current()
        if w > best[0]:
            best[0], best[1] = w, chosen[:]
        if best[0] == ceiling:
            return True
        if i == len(edges):
            return False
        reachable = set()
        for e in edges[i:]:
            reachable |= touched(e)
        if w + sum(value[j] for j in reachable if not hits[j]) <= best[0]:
            return False
        u, v = edges[i]
        if deg[u] < 2 and deg[v] < 2:
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            for j in touched((u, v)):
                hits[j] += 1
            done = go(i + 1)
            for j in touched((u, v)):
                hits[j] -= 1
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
            if done:
                return True
        return go(i + 1)

    go(0)
    cover = PathCycleCover.from_edges(n, best[1])
    assert saturation_weight(cover.edges, aux, eta) == best[0]
    return cover
