"""Shared graph builders and independent reference implementations for the tests."""

import random
from itertools import combinations

from kpp.graph import Graph


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, list(combinations(range(n), 2)))


def satellite_graph(seed, k=11, max_n=14, noise=None):
    """A center path or cycle with short cycles hung off it, plus a few extra edges.

    These are the shapes where anchors, special pieces and rewiring show up,
    which plain random graphs almost never produce at this size.
    """
    rng = random.Random(f"sat:{seed}")
    sizes = (4, 5) if k >= 11 else (4,)
    edges = set()
    center_len = rng.randint(1, 5)
    center = list(range(center_len))
    n = center_len
    for a, b in zip(center, center[1:]):
        edges.add((a, b))
    if center_len >= 4 and rng.random() < 0.5:
        edges.add((0, center_len - 1))
    while True:
        size = rng.choice(sizes)
        if n + size > max_n:
            break
        cyc = list(range(n, n + size))
        for i in range(size):
            edges.add(tuple(sorted((cyc[i], cyc[(i + 1) % size]))))
        anchor = rng.choice(center)
        edges.add((anchor, rng.choice(cyc)))
        n += size
        if rng.random() < 0.25:
            break
    extra = rng.randint(0, 3) if noise is None else noise
    for _ in range(extra):
        u, v = rng.sample(range(n), 2)
        edges.add((min(u, v), max(u, v)))
    return Graph(n, edges)


def naive_min_partition(g, k):
    """Fewest k^- paths covering g, by enumerating set partitions (n <= 8)."""
    from itertools import permutations

    def has_path(block):
        if len(block) == 1:
            return True
        for perm in permutations(block):
            if all(g.has_edge(a, b) for a, b in zip(perm, perm[1:])):
                return True
        return False

    best = [g.n]

    def rec(rest, count):
        if count >= best[0]:
            return
        if not rest:
            best[0] = count
            return
        first, others = rest[0], rest[1:]
        for r in range(min(k, len(rest)) - 1, -1, -1):
            for combo in combinations(others, r):
                block = (first,) + combo
                if has_path(block):
                    rec([v for v in others if v not in combo], count + 1)

    rec(list(range(g.n)), 0)
    return best[0] if g.n else 0


def assemble(center_len, kind="path", sats=(), extra_paths=(), extra_edges=()):
    """Build (g, f, w) for a hand-drawn F + W component.

    ``sats`` lists ``(position, size)`` pairs; each satellite cycle gets fresh
    vertex ids and is joined to ``center[position]`` through its first vertex.
    ``extra_paths`` appends isolated F-paths of the given orders.
    """
    from kpp.pathcover import PathCycleCover

    center = list(range(center_len))
    f_edges = [(a, b) for a, b in zip(center, center[1:])]
    if kind == "cycle":
        f_edges.append((0, center_len - 1))
    w_edges = []
    n = center_len
    cycles = []
    for pos, size in sats:
        cyc = list(range(n, n + size))
        f_edges += [(cyc[i], cyc[(i + 1) % size]) for i in range(size)]
        w_edges.append((center[pos], cyc[0]))
        cycles.append(cyc)
        n += size
    paths = []
    for order in extra_paths:
        p = list(range(n, n + order))
        f_edges += list(zip(p, p[1:]))
        paths.append(p)
        n += order
    g = Graph(n, f_edges + w_edges + list(extra_edges))
    f = PathCycleCover.from_edges(n, f_edges)
    w = PathCycleCover.from_edges(n, w_edges)
    return g, f, w, cycles, paths


def rewiring_instance(seed, max_n=24):
    """Hand-assembled F + W with paired satellites and stray edges leaving them.

    W saturates every short cycle exactly once, so it is a stingy
    maximum-weight cover for eta = 1; the stray edges are what the
    rewiring moves feed on.  Returns (g, f, w).
    """
    from kpp.pathcover import PathCycleCover

    rng = random.Random(f"rewire:{seed}")
    kind = "cycle" if rng.random() < 0.3 else "path"
    center_len = rng.randint(4, 6) if kind == "cycle" else rng.randint(1, 5)
    sats = []
    budget = max_n - center_len - 3
    while budget >= 4:
        pos = rng.randrange(center_len)
        size = rng.choice((4, 5))
        if size > budget or sum(1 for p, _ in sats if p == pos) >= 2:
            break
        sats.append((pos, size))
        budget -= size
        if rng.random() < 0.5 and size + 4 <= budget + size and sum(1 for p, _ in sats if p == pos) < 2:
            size2 = rng.choice((4, 5))
            if size2 <= budget:
                sats.append((pos, size2))
                budget -= size2
    extra = tuple(rng.choice((1, 2, 3)) for _ in range(rng.randint(0, 2)))
    g, f, w, cycles, paths = assemble(center_len, kind, sats, extra)
    n = g.n
    f_edges, w_edges = list(f.edges), list(w.edges)
    if rng.random() < 0.5:
        # a short cycle carrying one satellite: an edge-shaped component whose hub is short
        hub = list(range(n, n + 4))
        sat = list(range(n + 4, n + 4 + rng.choice((4, 5))))
        for cyc in (hub, sat):
            f_edges += [(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]
            cycles.append(cyc)
        w_edges.append((hub[0], sat[0]))
        n = sat[-1] + 1
    f = PathCycleCover.from_edges(n, f_edges)
    w = PathCycleCover.from_edges(n, w_edges)
    g = Graph(n, list(g.edges) + [e for e in f_edges + w_edges])
    comp_of = f.comp_of
    stray = set()
    for _ in range(rng.randint(1, 4)):
        cyc = rng.choice(cycles) if cycles else None
        if cyc is None:
            break
        u = rng.choice(cyc)
        v = rng.randrange(g.n)
        if comp_of[u] == comp_of[v] or (min(u, v), max(u, v)) in w.edges:
            continue
        stray.add((min(u, v), max(u, v)))
    g2 = Graph(g.n, list(g.edges) + list(stray))
    return g2, f, w
