"""Simple undirected graphs on dense vertex ids, edge-list I/O and generators."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable


Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Raised when edge-list text cannot be turned into a simple graph."""


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph with vertices ``0..n-1``.

    Neighbor lists are kept sorted so every traversal is deterministic.
    """

    __slots__ = ("n", "edges", "adj", "_adjset")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            es.add(norm_edge(u, v))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in es:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.n = n
        self.edges = frozenset(es)
        self.adj = tuple(tuple(sorted(x)) for x in nbrs)
        self._adjset = tuple(frozenset(x) for x in nbrs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjset[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class VertexMapping:
    """Correspondence between the vertices of a subgraph and its parent."""

    forward: tuple[int, ...]

    @property
    def inverse(self) -> dict[int, int]:
        return {p: s for s, p in enumerate(self.forward)}

    def to_parent(self, v: int) -> int:
        return self.forward[v]

    def map_paths(self, paths):
        return [tuple(self.forward[v] for v in p) for p in paths]


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format; ``#`` starts a comment."""
    header = None
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer token in {raw!r}") from None
        if a < 0 or b < 0:
            raise GraphFormatError(f"line {lineno}: negative value")
        if header is None:
            header = (a, b)
        else:
            lines.append((lineno, a, b))
    if header is None:
        raise GraphFormatError("missing 'n m' header line")
    n, m = header
    if len(lines) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(lines)} edge lines follow")
    edges = []
    for lineno, u, v in lines:
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        if u >= n or v >= n:
            raise GraphFormatError(f"line {lineno}: vertex index out of range (n={n})")
        edges.append((u, v))
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"


def induced_subgraph(g: Graph, keep) -> tuple[Graph, VertexMapping]:
    """Subgraph induced by ``keep``; sub-vertex i is the i-th smallest kept vertex."""
    forward = tuple(sorted(set(keep)))
    index = {p: s for s, p in enumerate(forward)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph(len(forward), edges), VertexMapping(forward)


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by min vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


# --- generators -------------------------------------------------------------

_FAMILY_RE = re.compile(r"^\s*([a-z_]+)\s*(?:\(\s*([^)]*)\s*\))?\s*$")

FAMILIES = ("gnp", "cycles_plus_chords", "planted_cover")


def parse_family(spec: str) -> tuple[str, dict]:
    """``"gnp(0.3)"`` -> ``("gnp", {"p": 0.3})``, ``"planted_cover(9)"`` -> k=9."""
    mt = _FAMILY_RE.match(spec)
    if not mt or mt.group(1) not in FAMILIES:
        raise ValueError(f"unknown generator family {spec!r}")
    name, arg = mt.group(1), mt.group(2)
    params: dict = {}
    if arg:
        if name == "gnp":
            params["p"] = float(arg)
        elif name == "planted_cover":
            params["k"] = int(arg)
        else:
            params["chords"] = int(arg)
    elif name == "gnp":
        raise ValueError("gnp needs an edge probability, e.g. gnp(0.3)")
    return name, params


def random_graph(n: int, family: str = "gnp", seed: int = 0, *, connected: bool = False, **params) -> Graph:
    """Seeded random graph; ``family`` is a name or a spec string like ``"gnp(0.2)"``.

    Families:
      gnp(p)                -- Erdos-Renyi.
      cycles_plus_chords    -- disjoint 4..7-cycles (rich in short cycles) plus random chords.
      planted_cover(k)      -- random k^- paths covering V plus noise edges.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if "(" in family:
        family, parsed = parse_family(family)
        params = {**parsed, **params}
    rng = random.Random(f"{family}:{n}:{seed}")
    edges: set[Edge] = set()
    if family == "gnp":
        p = params.get("p")
        if p is None or not 0.0 <= p <= 1.0:
            raise ValueError(f"gnp edge probability must lie in [0, 1], got {p!r}")
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    edges.add((u, v))
    elif family == "cycles_plus_chords":
        perm = list(range(n))
        rng.shuffle(perm)
        i = 0
        while i < n:
            size = rng.choice((4, 4, 4, 5, 5, 6, 7))
            block = perm[i:i + size]
            i += size
            for a, b in zip(block, block[1:]):
                edges.add(norm_edge(a, b))
            if len(block) >= 4:
                edges.add(norm_edge(block[0], block[-1]))
        chords = params.get("chords", max(1, n // 3))
        _add_noise(rng, n, edges, chords)
    elif family == "planted_cover":
        k = params.get("k", 9)
        if k < 1:
            raise ValueError("planted_cover needs k >= 1")
        perm = list(range(n))
        rng.shuffle(perm)
        i = 0
        while i < n:
            size = rng.randint(1, k)
            block = perm[i:i + size]
            i += size
            for a, b in zip(block, block[1:]):
                edges.add(norm_edge(a, b))
        _add_noise(rng, n, edges, params.get("noise", max(1, n // 3)))
    else:
        raise ValueError(f"unknown generator family {family!r}")
    if connected:
        _connect(rng, n, edges)
    return Graph(n, edges)


def _add_noise(rng: random.Random, n: int, edges: set, count: int) -> None:
    if n < 2:
        return
    budget = min(count, n * (n - 1) // 2 - len(edges))
    tries = 0
    while budget > 0 and tries < 20 * count + 100:
        tries += 1
        u, v = rng.sample(range(n), 2)
        e = norm_edge(u, v)
        if e not in edges:
            edges.add(e)
            budget -= 1


def _connect(rng: random.Random, n: int, edges: set) -> None:
    comps = connected_components(Graph(n, edges))
    for a, b in zip(comps, comps[1:]):
        edges.add(norm_edge(rng.choice(a), rng.choice(b)))
