"""End-to-end solvers: cover, saturate, decompose, build paths."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from decimal import Decimal
from fractions import Fraction

from .builders import (
    GuaranteeLog,
    PathPartition,
    build_11,
    build_910,
    cluster_path,
    cut_to_kpp,
    verify_partition,
)
from .covers import max_triangle_free_cover, resolve_tier
from .exact import FOUR_FIFTHS, R, Surd
from .factor import build_saturation_instance, extract_cover, max_weight_fg_factor
from .graph import Graph, connected_components, induced_subgraph
from .matching import WeightedGraph, max_weight_matching
from .pathcover import PathCycleCover
from .rebalance import RebalanceState, compute_counters, ordered_pair, rebalance_fixpoint
from .structure import (
    AuxiliaryGraph,
    ComponentView,
    StructureError,
    build_auxiliary_graph,
    combine_and_decompose,
    stingy_reduce,
)


@dataclass
class Approx1Result:
    f: PathCycleCover
    w: PathCycleCover
    aux: AuxiliaryGraph
    eta: int


def approx1(g: Graph, k: int, tier: str = "exact", threshold: int | None = None) -> Approx1Result:
    """F: triangle-free cover of g.  W: stingy maximum-weight cover of G'."""
    eta = 1 if k >= 11 else 0
    f = max_triangle_free_cover(g, tier, threshold)
    aux = build_auxiliary_graph(g, f)
    if aux.gprime.m == 0:
        w = PathCycleCover.empty(g.n)
    else:
        inst = build_saturation_instance(aux.gprime, aux.short_cycles, eta)
        w = extract_cover(max_weight_fg_factor(inst), aux.gprime)
        w = stingy_reduce(w, aux, eta)
    return Approx1Result(f, w, aux, eta)


def _short_cycle_path(cv: ComponentView, k: int, log: GuaranteeLog, name: str) -> PathPartition:
    pp = PathPartition([tuple(cv.center)], k)
    log.record(name, pp.num_edges, cv.length - 1, cv.length)
    return pp


# --- k in {9, 10} --------------------------------------------------------------

def _solve_910_connected(g: Graph, k: int, tier: str, threshold, log: GuaranteeLog) -> PathPartition:
    a1 = approx1(g, k, tier, threshold)
    dec = combine_and_decompose(a1.f, a1.w, k)
    out = PathPartition([], k)
    for cv in dec.views:
        if cv.critical == "I4":
            out.extend(_short_cycle_path(cv, k, log, "critical_cycle"))
        else:
            out.extend(build_910(cv, k, log)[0])
    return out


# --- k >= 11 -------------------------------------------------------------------

def branch_to_direct(c) -> bool:
    """True when the anchor counters favour building directly over recursing.

    Exact test of (g1 + g2)/(2 b1 + b2) >= (2 - 2r)/r without dividing.
    """
    twos = 2 * c.b1 + c.b2
    if twos == 0:
        return True
    return R * (c.g1 + c.g2) >= (2 - 2 * R) * twos


@dataclass
class LevelTrace:
    depth: int
    n: int
    counters: dict
    branch: str
    paths: int = 0
    edges: int = 0
    ops: int = 0


def detach_unbalanced_twos(dec, k: int):
    """Cut one connector at each 2-anchor of every unbalanced component.

    The 5-cycle is detached when there is one, otherwise the satellite with
    the smaller vertex id.  The center of each component stays the center.
    Returns the updated views plus the detached cycles.
    """
    views, detached = [], []
    for cv in dec.views:
        if cv.balanced or not cv.twos:
            views.append(cv)
            continue
        sats = list(cv.sats)
        for i in cv.twos:
            gone, stay = ordered_pair(*sats[i])
            sats[i] = (stay,)
            detached.append(gone)
        views.append(replace(cv, sats=tuple(sats)))
    return views, detached


def _census(views, detached, base_counts, c) -> None:
    i4, i5 = base_counts
    fours = sum(1 for s in detached if s.size == 4) + sum(1 for v in views if v.critical == "I4")
    fives = sum(1 for s in detached if s.size == 5) + sum(1 for v in views if v.critical == "I5")
    if fours != i4 + c.b1 or fives != i5 + c.b2:
        raise StructureError(
            f"short-cycle census after detaching: {fours} 4-cycles, {fives} 5-cycles; "
            f"expected {i4 + c.b1} and {i5 + c.b2}"
        )
    ones = sum(v.ones for v in views if not v.balanced)
    if ones != c.g1 + c.b1 + c.b2:
        raise StructureError(f"1-anchor census {ones} != {c.g1 + c.b1 + c.b2}")


def _solve_connected_11(g: Graph, k: int, tier: str, threshold, log: GuaranteeLog, trace: list, depth: int) -> PathPartition:
    if g.n == 0:
        return PathPartition([], k)
    if g.n == 1:
        return PathPartition([(0,)], k)
    if depth > 0 and len(connected_components(g)) > 1:
        out = PathPartition([], k)
        for comp in connected_components(g):
            sub, mapping = induced_subgraph(g, comp)
            part = _solve_connected_11(sub, k, tier, threshold, log, trace, depth)
            out.extend(PathPartition(mapping.map_paths(part.paths), k))
        return out

    a1 = approx1(g, k, tier, threshold)
    state = rebalance_fixpoint(RebalanceState(g, a1.f, a1.aux, a1.w, k, a1.eta))
    c = compute_counters(state)
    dec = state.decomposition
    level = LevelTrace(depth, g.n, c.to_dict(), "", ops=len(state.applied_ops))
    trace.append(level)
    out = PathPartition([], k)
    if branch_to_direct(c):
        level.branch = "direct"
        base = (sum(1 for v in dec.views if v.critical == "I4"),
                sum(1 for v in dec.views if v.critical == "I5"))
        views, detached = detach_unbalanced_twos(dec, k)
        _census(views, detached, base, c)
        for cv in views:
            if cv.critical:
                out.extend(_short_cycle_path(cv, k, log, "isolated_short_cycle"))
            else:
                out.extend(build_11(cv, k, log)[0])
        for sat in detached:
            seq = sat.opened()
            pp = PathPartition([tuple(seq)], k)
            log.record("isolated_short_cycle", pp.num_edges, sat.size - 1, sat.size)
            out.extend(pp)
    else:
        level.branch = "recurse"
        if not c.v_b:
            raise StructureError("recursion branch with nothing removed")
        sub = _solve_connected_11(c.g_b, k, tier, threshold, log, trace, depth + 1)
        out.extend(PathPartition(c.mapping.map_paths(sub.paths), k))
        for anchor, a, b in c.clusters:
            out.extend(cluster_path(anchor, a, b, k, log))
    level.paths, level.edges = out.num_paths, out.num_edges
    if out.num_paths + out.num_edges != g.n:
        raise StructureError(f"level {depth}: paths + edges != n")
    return out


# --- dispatch ------------------------------------------------------------------

@dataclass
class SolveReport:
    partition: PathPartition
    k: int
    n: int
    m: int
    mode: str | None
    certified_alpha: object = None
    recursion_depth: int = 0
    counters_trace: list = field(default_factory=list)
    guarantees: GuaranteeLog = field(default_factory=GuaranteeLog)
    tiers: list = field(default_factory=list)

    @property
    def edges(self) -> int:
        return self.partition.num_edges

    @property
    def paths(self) -> int:
        return self.partition.num_paths

    def to_dict(self) -> dict:
        bound = ratio_bound(self.k) if self.k >= 9 else None
        return {
            "k": self.k,
            "n": self.n,
            "m": self.m,
            "paths": [list(p) for p in self.partition.canonical()],
            "num_paths": self.paths,
            "num_edges": self.edges,
            "mode": self.mode,
            "certified_alpha": None if self.certified_alpha is None else str(self.certified_alpha),
            "ratio_bound_kpp": None if bound is None else str(bound.decimal),
            "recursion_depth": self.recursion_depth,
        }


def _matching_partition(g: Graph) -> PathPartition:
    m = max_weight_matching(WeightedGraph(g, {e: 1 for e in g.edges}))
    paths = [tuple(e) for e in sorted(m.edges)]
    covered = {v for e in m.edges for v in e}
    paths += [(v,) for v in range(g.n) if v not in covered]
    return PathPartition(paths, 2)


def _cover_and_cut(g: Graph, k: int, tier: str, threshold) -> PathPartition:
    f = max_triangle_free_cover(g, tier, threshold)
    out = PathPartition([], k)
    for comp in f.components:
        out.extend(cut_to_kpp(comp.order, k, cycle=comp.is_cycle))
    return out


def solve(g: Graph, k: int, tier: str = "auto", threshold: int | None = None, check: bool = True) -> SolveReport:
    """Partition g into few paths of at most k vertices."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    report = SolveReport(PathPartition([], k), k, g.n, g.m, None)
    if k == 1:
        report.partition = PathPartition([(v,) for v in range(g.n)], 1)
    elif k == 2:
        report.partition = _matching_partition(g)
    else:
        tiers = []
        for comp in connected_components(g):
            sub, mapping = induced_subgraph(g, comp)
            t = resolve_tier(tier, sub.n, threshold)
            tiers.append(t)
            if k <= 8:
                part = _cover_and_cut(sub, k, t, threshold)
            elif k <= 10:
                part = _solve_910_connected(sub, k, t, threshold, report.guarantees)
            else:
                trace: list = []
                part = _solve_connected_11(sub, k, t, threshold, report.guarantees, trace, 0)
                report.counters_trace.extend(trace)
                depth = max((lv.depth for lv in trace), default=0)
                report.recursion_depth = max(report.recursion_depth, depth)
            report.partition.extend(PathPartition(mapping.map_paths(part.paths), k))
        report.tiers = tiers
        exact = all(t == "exact" for t in tiers)
        report.mode = "exact_cover" if exact else "heuristic_cover"
        if exact and k >= 9:
            report.certified_alpha = FOUR_FIFTHS if k <= 10 else R
    if check:
        issues = verify_partition(report.partition, g, k)
        if issues:
            raise StructureError("infeasible partition: " + "; ".join(issues[:5]))
    return report


def solve_910(g: Graph, k: int, tier: str = "auto", threshold: int | None = None) -> SolveReport:
    if k not in (9, 10):
        raise ValueError("solve_910 handles k in {9, 10}")
    return solve(g, k, tier, threshold)


def solve_11plus(g: Graph, k: int, tier: str = "auto", threshold: int | None = None) -> SolveReport:
    if k < 11:
        raise ValueError("solve_11plus handles k >= 11")
    return solve(g, k, tier, threshold)


# --- ratios ------------------------------------------------------------------------

@dataclass(frozen=True)
class RatioBound:
    k: int
    alpha: Surd
    exact: Surd

    @property
    def decimal(self) -> Decimal:
        return self.exact.to_decimal(3)

    def __float__(self):
        return float(self.exact)


def kppe_alpha(k: int) -> Surd:
    if k < 9:
        raise ValueError("ratio guarantees start at k = 9")
    return Surd.lift(FOUR_FIFTHS) if k <= 10 else R


def ratio_bound(k: int) -> RatioBound:
    """Path-count ratio (1 - a) k + a implied by edge ratio a."""
    a = kppe_alpha(k)
    return RatioBound(k, a, (1 - a) * k + a)


def ratio_table(ks=range(9, 19)) -> list[RatioBound]:
    return [ratio_bound(k) for k in ks]
