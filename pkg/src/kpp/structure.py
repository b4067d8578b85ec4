"""Structure of F + W: auxiliary graph, saturation weight, star decomposition.

F is a triangle-free path-cycle cover of G.  Its 4- and 5-cycles are the
*short cycles*.  G' keeps the edges of G that join two different F-components
and touch a short cycle.  W is a path-cycle cover of G' that saturates (touches)
as many short cycles as possible, counted with weight 1 for 4-cycles and eta
for 5-cycles, and is *stingy*: every W-edge is the only one touching some
counted cycle.

Contracting every F-component of a connected component K of F + W gives a
single node, an edge or a star.  The hub of the star is the *center element*;
the leaves are short cycles (*satellites*) hanging off center vertices
(*anchors*) by exactly one W-edge each.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field, replace

from .graph import Edge, Graph, norm_edge
from .pathcover import CoverComponent, PathCycleCover


class StructureError(AssertionError):
    """An invariant of the F + W decomposition failed; indicates an upstream bug."""


@dataclass
class AuxiliaryGraph:
    gprime: Graph
    cover: PathCycleCover
    short_cycles: list[tuple[int, ...]]
    membership: list[int | None]

    def cycle_size(self, idx: int) -> int:
        return len(self.short_cycles[idx])


def build_auxiliary_graph(g: Graph, f: PathCycleCover) -> AuxiliaryGraph:
    if f.n != g.n:
        raise ValueError("cover and graph disagree on the vertex count")
    shorts = [c.order for c in f.components if c.is_cycle and c.size in (4, 5)]
    member: list[int | None] = [None] * g.n
    for i, cyc in enumerate(shorts):
        for v in cyc:
            member[v] = i
    keep = [
        (u, v) for u, v in g.sorted_edges()
        if f.comp_of[u] != f.comp_of[v] and (member[u] is not None or member[v] is not None)
    ]
    return AuxiliaryGraph(Graph(g.n, keep), f, shorts, member)


def saturated_cycles(edges, aux: AuxiliaryGraph) -> set[int]:
    hit = set()
    for u, v in edges:
        for x in (u, v):
            if aux.membership[x] is not None:
                hit.add(aux.membership[x])
    return hit


def saturation_weight(edges, aux: AuxiliaryGraph, eta: int) -> int:
    total = 0
    for idx in saturated_cycles(edges, aux):
        if aux.cycle_size(idx) == 4:
            total += 1
        else:
            total += eta
    return total


def _counts(aux: AuxiliaryGraph, eta: int):
    return lambda idx: 1 if aux.cycle_size(idx) == 4 else eta


def stingy_reduce(w: PathCycleCover, aux: AuxiliaryGraph, eta: int) -> PathCycleCover:
    """Drop edges (in sorted order) whose removal keeps the saturation weight.

    One pass suffices: an edge that is the sole saturator of a counted cycle
    stays so when other edges disappear.
    """
    value = _counts(aux, eta)
    touching: dict[int, int] = defaultdict(int)
    edges = sorted(w.edges)
    for u, v in edges:
        for idx in {aux.membership[u], aux.membership[v]} - {None}:
            touching[idx] += 1
    kept = set(edges)
    for u, v in edges:
        idxs = {aux.membership[u], aux.membership[v]} - {None}
        if any(touching[i] == 1 and value(i) > 0 for i in idxs):
            continue
        kept.discard((u, v))
        for i in idxs:
            touching[i] -= 1
    return PathCycleCover.from_edges(w.n, kept)


def is_stingy(edges, aux: AuxiliaryGraph, eta: int) -> bool:
    edges = set(edges)
    base = saturation_weight(edges, aux, eta)
    return all(saturation_weight(edges - {e}, aux, eta) < base for e in edges)


# --- decomposition ----------------------------------------------------------

@dataclass(frozen=True)
class Satellite:
    cycle: tuple[int, ...]
    anchor: int
    nu: int

    @property
    def size(self) -> int:
        return len(self.cycle)

    @property
    def eps(self) -> Edge:
        return norm_edge(self.anchor, self.nu)

    def opened(self) -> list[int]:
        """The cycle minus the edge from nu to its successor, listed so it ends at nu."""
        c = self.cycle
        p = c.index(self.nu)
        return list(c[p + 1:]) + list(c[:p + 1])


@dataclass
class ComponentView:
    """One connected component of F + W, or a segment of one.

    ``center`` lists v_1..v_l; ``sats[i]`` holds the satellites attached to
    ``center[i]`` so the anchor degree of v_i is ``len(sats[i])``.
    """

    cid: int
    center: tuple[int, ...]
    center_kind: str  # "path" or "cycle"
    sats: tuple[tuple[Satellite, ...], ...]
    shape: str = "single"  # "single", "edge" or "star"
    provenance: tuple | None = None

    def __post_init__(self):
        if len(self.sats) != len(self.center):
            raise StructureError("satellite table misaligned with center")

    @property
    def length(self) -> int:
        return len(self.center)

    @property
    def is_cycle(self) -> bool:
        return self.center_kind == "cycle"

    def degree(self, i: int) -> int:
        return len(self.sats[i])

    def satellites(self) -> list[Satellite]:
        return [s for group in self.sats for s in group]

    @property
    def vertices(self) -> frozenset:
        vs = set(self.center)
        for s in self.satellites():
            vs.update(s.cycle)
        return frozenset(vs)

    @property
    def f_edges(self) -> int:
        """Edges of F inside this component (|F_K|)."""
        center = self.length if self.is_cycle else self.length - 1
        return center + sum(s.size for s in self.satellites())

    @property
    def ones(self) -> int:
        return sum(1 for i in range(self.length) if self.degree(i) == 1)

    @property
    def twos(self) -> list[int]:
        return [i for i in range(self.length) if self.degree(i) == 2]

    @property
    def critical(self) -> str | None:
        if not self.satellites() and self.is_cycle and self.length in (4, 5):
            return f"I{self.length}"
        return None

    @property
    def balanced(self) -> bool:
        if not (self.is_cycle and self.length in (4, 5)):
            return False
        degs = sorted(self.degree(i) for i in range(self.length))
        return degs[-1] == 2 and degs[-2] == 0

    def to_dict(self) -> dict:
        return {
            "component": self.cid,
            "shape": self.shape,
            "center_kind": self.center_kind,
            "center": list(self.center),
            "anchors": {str(v): self.degree(i) for i, v in enumerate(self.center)},
            "satellites": [
                {"cycle": list(s.cycle), "anchor": s.anchor, "nu": s.nu}
                for s in self.satellites()
            ],
            "critical": self.critical,
            "balanced": self.balanced,
        }


@dataclass
class Segment(ComponentView):
    """K[i, j]: a copy of a contiguous stretch of a component's center."""


def rotate(cv: ComponentView, s: int) -> ComponentView:
    """Relabel a cycle center so that position ``s`` (0-based) becomes v_1."""
    if not cv.is_cycle:
        raise ValueError("only cycle centers can be rotated")
    s %= cv.length
    return replace(cv, center=cv.center[s:] + cv.center[:s], sats=cv.sats[s:] + cv.sats[:s])


def split_segment(cv: ComponentView, i: int, j: int) -> Segment:
    """K[i, j] with 1-based inclusive indices; the result always has a path center."""
    if not 1 <= i <= j <= cv.length:
        raise IndexError(f"segment [{i}, {j}] out of range for center of order {cv.length}")
    sats = cv.sats[i - 1:j]
    nsat = sum(len(x) for x in sats)
    shape = "single" if nsat == 0 else ("edge" if nsat == 1 else "star")
    return Segment(cv.cid, cv.center[i - 1:j], "path", sats, shape, provenance=(cv.cid, i, j))


@dataclass
class Decomposition:
    views: list[ComponentView]
    where: dict = field(default_factory=dict)  # vertex -> (view index, "anchor"|"satellite", payload)

    def anchor_degree(self, v: int) -> int | None:
        loc = self.where.get(v)
        if loc is None or loc[1] != "anchor":
            return None
        view = self.views[loc[0]]
        return view.degree(loc[2])

    def satellite_of(self, v: int) -> Satellite | None:
        loc = self.where.get(v)
        if loc is None or loc[1] != "satellite":
            return None
        return loc[2]

    def view_of(self, v: int) -> ComponentView:
        return self.views[self.where[v][0]]

    def to_json(self) -> str:
        return json.dumps([cv.to_dict() for cv in self.views], sort_keys=True)


def _eligible(comp: CoverComponent, k: int) -> bool:
    if not comp.is_cycle:
        return False
    return comp.size == 4 or (comp.size == 5 and k >= 11)


def combine_and_decompose(f: PathCycleCover, w: PathCycleCover, k: int) -> Decomposition:
    """Split F + W into components and identify center, satellites and anchors."""
    comps = f.components
    parent = list(range(len(comps)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    meta_edges: dict[tuple[int, int], list[Edge]] = defaultdict(list)
    for u, v in sorted(w.edges):
        cu, cv_ = f.comp_of[u], f.comp_of[v]
        if cu == cv_:
            raise StructureError(f"W-edge ({u}, {v}) lies inside one F-component")
        meta_edges[(min(cu, cv_), max(cu, cv_))].append((u, v))
        parent[find(cu)] = find(cv_)
    groups: dict[int, list[int]] = defaultdict(list)
    for c in range(len(comps)):
        groups[find(c)].append(c)
    by_group: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for pair, es in meta_edges.items():
        if len(es) > 1:
            raise StructureError(f"F-components {pair} joined by {len(es)} W-edges")
        by_group[find(pair[0])].append(pair)

    ordered = sorted(groups.values(), key=lambda cs: min(min(comps[c].order) for c in cs))
    views: list[ComponentView] = []
    where: dict = {}
    for nodes in ordered:
        pairs = by_group.get(find(nodes[0]), [])
        if len(pairs) != len(nodes) - 1:
            raise StructureError("metagraph contains a cycle")
        deg: dict[int, int] = defaultdict(int)
        for a, b in pairs:
            deg[a] += 1
            deg[b] += 1
        if len(nodes) == 1:
            center, shape = nodes[0], "single"
        elif len(nodes) == 2:
            a, b = nodes
            ea, eb = _eligible(comps[a], k), _eligible(comps[b], k)
            if not (ea or eb):
                raise StructureError("edge-shaped metagraph without an eligible satellite")
            if ea and eb:
                sat = a if min(comps[a].order) < min(comps[b].order) else b
            else:
                sat = a if ea else b
            center, shape = (b if sat == a else a), "edge"
        else:
            hubs = [c for c in nodes if deg[c] >= 2]
            if len(hubs) != 1:
                raise StructureError("metagraph is not a star")
            center, shape = hubs[0], "star"
        leaves = [c for c in nodes if c != center]
        for c in leaves:
            if not _eligible(comps[c], k):
                raise StructureError(f"satellite F-component {c} is not an admissible short cycle")
            if deg[c] != 1:
                raise StructureError("satellite with more than one W-edge")
        ccomp = comps[center]
        pos = {v: i for i, v in enumerate(ccomp.order)}
        sat_lists: list[list[Satellite]] = [[] for _ in ccomp.order]
        for c in leaves:
            pair = (min(c, center), max(c, center))
            u, v = meta_edges[pair][0]
            nu, anchor = (u, v) if f.comp_of[u] == c else (v, u)
            sat_lists[pos[anchor]].append(Satellite(comps[c].order, anchor, nu))
        for lst in sat_lists:
            if len(lst) > 2:
                raise StructureError("anchor with more than two W-edges")
            lst.sort(key=lambda s: min(s.cycle))
        view = ComponentView(
            len(views), ccomp.order, ccomp.kind, tuple(tuple(x) for x in sat_lists), shape
        )
        idx = len(views)
        views.append(view)
        for i, v in enumerate(view.center):
            where[v] = (idx, "anchor", i)
        for s in view.satellites():
            for v in s.cycle:
                where[v] = (idx, "satellite", s)
    return Decomposition(views, where)
