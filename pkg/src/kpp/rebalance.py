"""Rewiring W to get rid of 2-anchors in unbalanced components (k >= 11).

Three local moves, each keeping W a stingy maximum-weight cover of G':

* ``reattach``: a satellite C hanging off a 2-anchor moves to a 0-anchor
  adjacent to it.
* ``pair_satellites``: C and another satellite C^ adjacent to it drop their
  connectors and are joined to each other directly.
* ``steal_satellite``: like ``pair_satellites`` when the owner of C^ is just a
  short cycle plus C^; only C's connector is replaced, so C^ becomes a hub.

``steal_satellite`` is only tried when neither of the other two moves applies
anywhere.  After every move the decomposition is rebuilt from scratch.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graph import Graph, induced_subgraph, norm_edge
from .pathcover import PathCycleCover
from .structure import (
    AuxiliaryGraph,
    ComponentView,
    Decomposition,
    Satellite,
    StructureError,
    combine_and_decompose,
    is_stingy,
    saturation_weight,
)

OP_NAMES = {1: "reattach", 2: "pair_satellites", 3: "steal_satellite"}


@dataclass(frozen=True)
class AppliedOp:
    op: int
    anchor: int
    removed: tuple
    added: tuple

    @property
    def name(self) -> str:
        return OP_NAMES[self.op]

    def to_dict(self) -> dict:
        return {
            "op": self.name,
            "anchor": self.anchor,
            "removed": [list(e) for e in self.removed],
            "added": list(self.added),
        }


@dataclass
class RebalanceState:
    g: Graph
    f: PathCycleCover
    aux: AuxiliaryGraph
    w: PathCycleCover
    k: int
    eta: int
    decomposition: Decomposition = None
    applied_ops: list = field(default_factory=list)
    check: bool = True

    def __post_init__(self):
        if self.decomposition is None:
            self.decomposition = combine_and_decompose(self.f, self.w, self.k)

    def op_log_json(self) -> str:
        return json.dumps([op.to_dict() for op in self.applied_ops])


def short_cycle_center(cv: ComponentView) -> bool:
    return cv.is_cycle and cv.length in (4, 5)


def unbalanced_two_anchors(dec: Decomposition) -> list[tuple[ComponentView, int]]:
    """(view, position) of every 2-anchor of an unbalanced component, by vertex id."""
    out = []
    for cv in dec.views:
        if cv.balanced:
            continue
        out.extend((cv, i) for i in cv.twos)
    return sorted(out, key=lambda t: t[0].center[t[1]])


def potential(dec: Decomposition) -> tuple[int, int]:
    u2 = len(unbalanced_two_anchors(dec))
    balanced = sum(1 for cv in dec.views if cv.balanced)
    return u2, 2 * u2 + balanced


def _candidates(state: RebalanceState):
    """(anchor vertex, satellite, w, v) in scan order."""
    dec = state.decomposition
    for cv, i in unbalanced_two_anchors(dec):
        anchor = cv.center[i]
        for sat in cv.sats[i]:
            for w in sorted(sat.cycle):
                for v in state.g.adj[w]:
                    if v in sat.cycle:
                        continue
                    yield anchor, sat, w, v


def _apply(state: RebalanceState, op: int, anchor: int, removed, added) -> AppliedOp:
    before_w = saturation_weight(state.w.edges, state.aux, state.eta)
    u2_before, phi_before = potential(state.decomposition)
    edges = set(state.w.edges)
    for e in removed:
        if e not in edges:
            raise StructureError(f"edge {e} scheduled for removal is not in W")
        edges.discard(e)
    if added in edges or not state.aux.gprime.has_edge(*added):
        raise StructureError(f"edge {added} cannot be added to W")
    edges.add(added)
    new_w = PathCycleCover.from_edges(state.w.n, edges)
    state.w = new_w
    state.decomposition = combine_and_decompose(state.f, new_w, state.k)
    applied = AppliedOp(op, anchor, tuple(removed), added)
    state.applied_ops.append(applied)
    if state.check:
        if saturation_weight(new_w.edges, state.aux, state.eta) != before_w:
            raise StructureError(f"{applied.name} changed the saturation weight")
        if not is_stingy(new_w.edges, state.aux, state.eta):
            raise StructureError(f"{applied.name} left W non-stingy")
        u2, phi = potential(state.decomposition)
        if u2 > u2_before or phi >= phi_before:
            raise StructureError(f"{applied.name} did not make progress")
    return applied


def try_operation1(state: RebalanceState) -> AppliedOp | None:
    dec = state.decomposition
    for anchor, sat, w, v in _candidates(state):
        if dec.anchor_degree(v) == 0:
            return _apply(state, 1, anchor, [sat.eps], norm_edge(w, v))
    return None


def _other_satellite(state: RebalanceState, sat: Satellite, v: int):
    other = state.decomposition.satellite_of(v)
    if other is None or other.cycle == sat.cycle:
        return None, None
    return other, state.decomposition.view_of(v)


def _edge_with_short_hub(cv: ComponentView) -> bool:
    return cv.shape == "edge" and short_cycle_center(cv)


def try_operation2(state: RebalanceState) -> AppliedOp | None:
    for anchor, sat, w, v in _candidates(state):
        other, owner = _other_satellite(state, sat, v)
        if other is None or _edge_with_short_hub(owner):
            continue
        return _apply(state, 2, anchor, sorted([sat.eps, other.eps]), norm_edge(w, v))
    return None


def try_operation3(state: RebalanceState) -> AppliedOp | None:
    for anchor, sat, w, v in _candidates(state):
        other, owner = _other_satellite(state, sat, v)
        if other is None or not _edge_with_short_hub(owner):
            continue
        return _apply(state, 3, anchor, [sat.eps], norm_edge(w, v))
    return None


def rebalance_fixpoint(state: RebalanceState) -> RebalanceState:
    n = state.g.n
    while True:
        op = try_operation1(state) or try_operation2(state)
        if op is None:
            op = try_operation3(state)
        if op is None:
            break
        if len(state.applied_ops) > n:
            raise StructureError("more rewiring moves than vertices")
    if state.check:
        check_fixpoint(state)
    return state


def fixpoint_violations(state: RebalanceState) -> list[tuple[int, int]]:
    """Edges leaving a satellite of an unbalanced 2-anchor toward a 0-anchor or foreign satellite."""
    dec = state.decomposition
    bad = []
    for anchor, sat, w, v in _candidates(state):
        if norm_edge(w, v) in state.w.edges:
            continue
        if dec.anchor_degree(v) in (1, 2):
            continue
        bad.append((w, v))
    return bad


def check_fixpoint(state: RebalanceState) -> None:
    bad = fixpoint_violations(state)
    if bad:
        raise StructureError(f"rewiring stopped with movable satellites: {bad}")


@dataclass
class Counters:
    b1: int
    b2: int
    g1: int
    g2: int
    v_b: frozenset
    g_b: Graph
    mapping: object = None
    clusters: list = field(default_factory=list)  # (anchor, C_i, C'_i) with C_i the 5-cycle if any

    @property
    def weighted_twos(self) -> int:
        return 2 * self.b1 + self.b2

    def to_dict(self) -> dict:
        return {"b1": self.b1, "b2": self.b2, "g1": self.g1, "g2": self.g2, "v_b": sorted(self.v_b)}


def ordered_pair(a: Satellite, b: Satellite) -> tuple[Satellite, Satellite]:
    """Order a 2-anchor's satellites so a 5-cycle, if present, comes first."""
    if a.size != 5 and b.size == 5:
        return b, a
    return a, b


def compute_counters(state: RebalanceState) -> Counters:
    dec = state.decomposition
    b1 = b2 = g1 = g2 = 0
    v_b: set[int] = set()
    clusters = []
    for cv in dec.views:
        g1 += cv.ones
        if cv.balanced:
            g2 += len(cv.twos)
            continue
        for i in cv.twos:
            c, c2 = ordered_pair(*cv.sats[i])
            if c.size == 4 and c2.size == 4:
                b1 += 1
            else:
                b2 += 1
            v_b.add(cv.center[i])
            v_b.update(c.cycle)
            v_b.update(c2.cycle)
            clusters.append((cv.center[i], c, c2))
    keep = [v for v in range(state.g.n) if v not in v_b]
    g_b, mapping = induced_subgraph(state.g, keep)
    return Counters(b1, b2, g1, g2, frozenset(v_b), g_b, mapping, clusters)
