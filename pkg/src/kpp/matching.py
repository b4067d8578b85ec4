"""Exact maximum-weight matching on general graphs with integer weights."""

from __future__ import annotations

from dataclasses import dataclass, field

import rustworkx as rx

from .graph import Edge, Graph, norm_edge

BRUTE_FORCE_LIMIT = 16


class SizeLimitError(ValueError):
    """An exhaustive routine was asked to run beyond its configured size guard."""


@dataclass
class WeightedGraph:
    base: Graph
    weight: dict[Edge, int] = field(default_factory=dict)

    def __post_init__(self):
        w = {}
        for (u, v), val in self.weight.items():
            e = norm_edge(u, v)
            if e not in self.base.edges:
                raise ValueError(f"weighted edge {e} is not an edge of the base graph")
            if int(val) != val or val < 0:
                raise ValueError("weights must be non-negative integers")
            w[e] = int(val)
        for e in self.base.edges:
            w.setdefault(e, 0)
        self.weight = w

    @classmethod
    def from_edges(cls, n: int, weighted_edges) -> "WeightedGraph":
        weighted_edges = list(weighted_edges)
        base = Graph(n, [(u, v) for u, v, _ in weighted_edges])
        return cls(base, {(u, v): w for u, v, w in weighted_edges})

    def w(self, u: int, v: int) -> int:
        return self.weight[norm_edge(u, v)]


@dataclass(frozen=True)
class Matching:
    edges: frozenset
    weight: int

    def __len__(self):
        return len(self.edges)

    def mate(self) -> dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out


def _as_matching(wg: WeightedGraph, pairs) -> Matching:
    es = frozenset(norm_edge(u, v) for u, v in pairs)
    return Matching(es, sum(wg.weight[e] for e in es))


def max_weight_matching(wg: WeightedGraph) -> Matching:
    """Maximum total weight matching (cardinality is not maximized).

    Zero-weight edges are never needed for optimality and are left out of the
    returned matching unless the backend picks them; either way the weight is
    optimal.
    """
    g = rx.PyGraph(multigraph=False)
    g.add_nodes_from(range(wg.base.n))
    for (u, v), w in wg.weight.items():
        g.add_edge(u, v, w)
    pairs = rx.max_weight_matching(g, max_cardinality=False, weight_fn=lambda w: w)
    return _as_matching(wg, pairs)


def is_matching(edges) -> bool:
    seen = set()
    for u, v in edges:
        if u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


def brute_force_matching(wg: WeightedGraph, limit: int = BRUTE_FORCE_LIMIT) -> Matching:
    """Exhaustive optimum via a bitmask DP over the set of still-free vertices."""
    n = wg.base.n
    if n > limit:
        raise SizeLimitError(f"brute_force_matching supports at most {limit} vertices, got {n}")
    adj = [[] for _ in range(n)]
    for (u, v), w in wg.weight.items():
        adj[u].append((v, w))
        adj[v].append((u, w))
    memo: dict[int, tuple[int, tuple]] = {}

    def best(free: int) -> tuple[int, tuple]:
        if free == 0:
            return 0, ()
        if free in memo:
            return memo[free]
        u = (free & -free).bit_length() - 1
        rest = free & ~(1 << u)
        res = best(rest)  # u stays unmatched
        for v, w in adj[u]:
            if rest >> v & 1:
                sub_w, sub_e = best(rest & ~(1 << v))
                if sub_w + w > res[0]:
                    res = (sub_w + w, ((u, v),) + sub_e)
        memo[free] = res
        return res

    _, pairs = best((1 << n) - 1)
    return _as_matching(wg, pairs)
