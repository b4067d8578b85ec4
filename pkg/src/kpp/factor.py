"""Maximum-weight [f,g]-factors by reduction to weighted matching.

Gadget per vertex v of degree d: ``min(g(v), d)`` port copies.  When f(v) > 0
the ports are required and ``g'(v) - f(v)`` optional slack nodes are joined to
every port, so at least f(v) ports must be taken by real edges.  When f(v) == 0
the ports are optional and no slack is needed.

Gadget per edge e = uv: two required nodes e_u, e_v joined by a zero edge.  e_u
is joined to each u-port with weight w(e), e_v to each v-port with weight 0.
The edge belongs to the factor exactly when both e_u and e_v sit on ports.

Required nodes are enforced with a bonus M > sum of all weights per required
endpoint, so the matching first covers as many required nodes as possible; the
factor exists iff every required node is covered.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Edge, Graph, norm_edge
from .matching import WeightedGraph, max_weight_matching
from .pathcover import PathCycleCover


class FactorInfeasible(ValueError):
    """No subgraph meets the requested degree bounds."""


@dataclass
class DegreeBounds:
    f: list[int]
    g: list[int]

    def __post_init__(self):
        if len(self.f) != len(self.g):
            raise ValueError("f and g must have one entry per vertex")
        for v, (lo, hi) in enumerate(zip(self.f, self.g)):
            if not 0 <= lo <= hi:
                raise ValueError(f"invalid bounds at vertex {v}: f={lo}, g={hi}")

    @classmethod
    def uniform(cls, n: int, f: int, g: int) -> "DegreeBounds":
        return cls([f] * n, [g] * n)


@dataclass
class FactorInstance:
    wg: WeightedGraph
    bounds: DegreeBounds
    gadget_tags: dict = field(default_factory=dict)
    n_original: int | None = None

    def __post_init__(self):
        if len(self.bounds.f) != self.wg.base.n:
            raise ValueError("bounds length differs from vertex count")
        if self.n_original is None:
            self.n_original = self.wg.base.n


def factor_weight(inst: FactorInstance, edges) -> int:
    return sum(inst.wg.w(u, v) for u, v in edges)


def max_weight_fg_factor(inst: FactorInstance) -> frozenset:
    """Edge set of a maximum-weight [f,g]-factor; raises FactorInfeasible."""
    base = inst.wg.base
    f, g = inst.bounds.f, inst.bounds.g
    usable = [e for e in base.sorted_edges() if g[e[0]] > 0 and g[e[1]] > 0]
    deg = [0] * base.n
    for u, v in usable:
        deg[u] += 1
        deg[v] += 1
    for v in range(base.n):
        if f[v] > deg[v]:
            raise FactorInfeasible(f"vertex {v} needs degree {f[v]} but has only {deg[v]} usable edges")

    big = sum(inst.wg.weight[e] for e in usable) + 1
    nodes = 0
    required: set[int] = set()

    def new_node(req: bool) -> int:
        nonlocal nodes
        nodes += 1
        if req:
            required.add(nodes - 1)
        return nodes - 1

    raw: list[tuple[int, int, int]] = []
    ports: list[list[int]] = []
    for v in range(base.n):
        cap = min(g[v], deg[v])
        req = f[v] > 0
        ps = [new_node(req) for _ in range(cap)]
        ports.append(ps)
        if req:
            for _ in range(cap - f[v]):
                s = new_node(False)
                raw.extend((s, p, 0) for p in ps)
    edge_nodes: dict[Edge, tuple[int, int]] = {}
    for u, v in usable:
        a, b = new_node(True), new_node(True)
        edge_nodes[(u, v)] = (a, b)
        raw.append((a, b, 0))
        w = inst.wg.weight[(u, v)]
        raw.extend((p, a, w) for p in ports[u])
        raw.extend((p, b, 0) for p in ports[v])

    weighted = []
    for x, y, w in raw:
        weighted.append((x, y, w + big * ((x in required) + (y in required))))
    mg = WeightedGraph.from_edges(nodes, weighted)
    m = max_weight_matching(mg)
    mate = m.mate()
    if any(r not in mate for r in required):
        raise FactorInfeasible("degree bounds cannot all be met")
    port_owner = {}
    for v, ps in enumerate(ports):
        for p in ps:
            port_owner[p] = v
    chosen = set()
    for e, (a, b) in edge_nodes.items():
        if port_owner.get(mate[a]) is not None and port_owner.get(mate[b]) is not None:
            chosen.add(e)
    return frozenset(chosen)


def brute_force_fg_factor(inst: FactorInstance, max_edges: int = 22):
    """Best (weight, edge set) over all edge subsets meeting the bounds, or None."""
    edges = inst.wg.base.sorted_edges()
    if len(edges) > max_edges:
        raise ValueError(f"brute force factor search limited to {max_edges} edges")
    f, g = inst.bounds.f, inst.bounds.g
    n = inst.wg.base.n
    best = None
    for mask in range(1 << len(edges)):
        deg = [0] * n
        w = 0
        chosen = []
        for i, (u, v) in enumerate(edges):
            if mask >> i & 1:
                deg[u] += 1
                deg[v] += 1
                w += inst.wg.weight[(u, v)]
                chosen.append((u, v))
        if all(f[v] <= deg[v] <= g[v] for v in range(n)):
            if best is None or w > best[0]:
                best = (w, frozenset(chosen))
    return best


def build_saturation_instance(gprime: Graph, short_cycles, eta: int) -> FactorInstance:
    """Gadget whose maximum factor restricted to G' is a maximum-weight cover of G'.

    ``short_cycles`` lists the vertex sequences of the 4- and 5-cycles of F.
    Cycle i gets helper vertices x_i = n+3i, y_i = n+3i+1, z_i = n+3i+2.
    """
    if eta not in (0, 1):
        raise ValueError("eta must be 0 or 1")
    n = gprime.n
    owner: dict[int, int] = {}
    for i, cyc in enumerate(short_cycles):
        if len(cyc) not in (4, 5):
            raise ValueError(f"short cycle {i} has order {len(cyc)}")
        for v in cyc:
            if v in owner:
                raise ValueError(f"short cycles {owner[v]} and {i} overlap at vertex {v}")
            owner[v] = i
    s = len(short_cycles)
    f = [0] * (n + 3 * s)
    g = [2] * n + [0] * (3 * s)
    tags: dict[int, tuple] = {v: ("original",) for v in range(n)}
    weighted: list[tuple[int, int, int]] = [(u, v, 0) for u, v in gprime.sorted_edges()]
    for i, cyc in enumerate(short_cycles):
        x, y, z = n + 3 * i, n + 3 * i + 1, n + 3 * i + 2
        tags[x], tags[y], tags[z] = ("x", i), ("y", i), ("z", i)
        for v in cyc:
            f[v] = 2
            weighted.append((x, v, 0))
            weighted.append((y, v, 0))
        w2 = 1 if len(cyc) == 4 else eta
        weighted.append((x, z, w2))
        weighted.append((y, z, w2))
        g[x] = g[y] = len(cyc)
        g[z] = 1
    wg = WeightedGraph.from_edges(n + 3 * s, weighted)
    return FactorInstance(wg, DegreeBounds(f, g), tags, n_original=n)


def extract_cover(solution, gprime: Graph) -> PathCycleCover:
    """Keep only the solution edges that belong to G'."""
    kept = [norm_edge(u, v) for u, v in solution
            if u < gprime.n and v < gprime.n and gprime.has_edge(u, v)]
    return PathCycleCover.from_edges(gprime.n, kept)
