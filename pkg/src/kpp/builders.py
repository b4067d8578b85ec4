"""Constructions turning a component of F + W into k^- paths with a proven edge count.

Every construction appends an :class:`EdgeGuarantee` to the ``log`` it is
given, recording how many edges it produced and the lower bound its argument
promises.  Bounds live in Q(sqrt 11) so they can be checked exactly.

Notation used below: |F| is the number of F-edges inside the piece, |O| the
number of 1-anchors, r = (9 - sqrt 11)/7.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import FOUR_FIFTHS, FIVE_SIXTHS, R, Surd
from .graph import Graph, norm_edge
from .structure import ComponentView, Satellite, StructureError, rotate, split_segment


@dataclass
class PathPartition:
    paths: list[tuple[int, ...]]
    k: int

    @property
    def num_paths(self) -> int:
        return len(self.paths)

    @property
    def num_edges(self) -> int:
        return sum(len(p) - 1 for p in self.paths)

    @property
    def num_vertices(self) -> int:
        return sum(len(p) for p in self.paths)

    def extend(self, other: "PathPartition") -> None:
        self.paths.extend(other.paths)

    def canonical(self) -> list[tuple[int, ...]]:
        return sorted(p if p[0] <= p[-1] else p[::-1] for p in self.paths)

    def labels(self, n: int) -> list[int]:
        out = [-1] * n
        for i, p in enumerate(self.paths):
            for v in p:
                out[v] = i
        return out


@dataclass(frozen=True)
class EdgeGuarantee:
    construction: str
    achieved: int
    promised: Surd
    f_edges: int = 0
    ones: int = 0

    @property
    def holds(self) -> bool:
        return Surd.lift(self.achieved) >= self.promised

    def to_dict(self) -> dict:
        return {
            "construction": self.construction,
            "achieved": self.achieved,
            "promised": str(self.promised),
            "promised_approx": round(float(self.promised), 6),
            "holds": self.holds,
        }


class GuaranteeLog(list):
    def record(self, name, achieved, promised, f_edges=0, ones=0) -> EdgeGuarantee:
        g = EdgeGuarantee(name, int(achieved), Surd.lift(promised), f_edges, ones)
        self.append(g)
        return g

    def violations(self) -> list[EdgeGuarantee]:
        return [g for g in self if not g.holds]


def _log(log):
    return log if log is not None else GuaranteeLog()


# --- basic cutting ------------------------------------------------------------

def cut_sequence(seq, k: int) -> list[tuple[int, ...]]:
    seq = tuple(seq)
    return [seq[i:i + k] for i in range(0, len(seq), k)]


def cut_edges(length: int, k: int) -> int:
    """Edges kept when a path of ``length`` vertices is cut into k^- paths."""
    return length - -(-length // k)


def cut_to_kpp(c, k: int, cycle: bool = False, log=None) -> PathPartition:
    """Cut a path (or a cycle, after dropping its closing edge) into k^- paths.

    ``c`` is a vertex sequence or an int ``l`` meaning ``0..l-1``.
    """
    seq = tuple(range(c)) if isinstance(c, int) else tuple(c)
    if not seq:
        return PathPartition([], k)
    if cycle and len(seq) < 4:
        raise ValueError("cycles handled here have order at least 4")
    pp = PathPartition(cut_sequence(seq, k), k)
    if log is not None:
        ell = len(seq)
        if k in (9, 10) and ell >= 5:
            log.record("cut", pp.num_edges, FOUR_FIFTHS * ell, ell)
        elif k >= 11 and ell >= 6:
            log.record("cut", pp.num_edges, FIVE_SIXTHS * ell, ell)
    return pp


def _cut(seq, k) -> PathPartition:
    return PathPartition(cut_sequence(seq, k), k)


def _pair(a: Satellite, anchors, b: Satellite | None = None) -> list[int]:
    """open(a) + anchors [+ reversed open(b)]: a path through one or two satellites."""
    seq = a.opened() + list(anchors)
    if b is not None:
        seq += b.opened()[::-1]
    return seq


def _center_seq(cv: ComponentView, lo: int, hi: int) -> list[int]:
    return list(cv.center[lo:hi + 1])


def verify_partition(pp: PathPartition, g: Graph, k: int, vertices=None) -> list[str]:
    """Feasibility report; an empty list means ``pp`` is a k^- path partition."""
    target = set(range(g.n)) if vertices is None else set(vertices)
    issues = []
    seen: dict[int, int] = {}
    for idx, path in enumerate(pp.paths):
        if len(path) == 0:
            issues.append(f"path {idx}: empty")
            continue
        if len(path) > k:
            issues.append(f"path {idx}: over-length ({len(path)} vertices > k={k})")
        for v in path:
            if not (isinstance(v, int) and 0 <= v < g.n):
                issues.append(f"path {idx}: vertex {v!r} not in graph")
                continue
            if v in seen:
                issues.append(f"duplicate vertex {v} in paths {seen[v]} and {idx}")
            else:
                seen[v] = idx
        for a, b in zip(path, path[1:]):
            if a == b or not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
                issues.append(f"path {idx}: non-adjacent consecutive pair ({a}, {b})")
    missing = sorted(target - set(seen))
    if missing:
        issues.append(f"coverage: missing vertices {missing}")
    extra = sorted(set(seen) - target)
    if extra:
        issues.append(f"coverage: vertices outside target {extra}")
    if pp.num_paths + pp.num_edges != pp.num_vertices:
        issues.append("path count plus edge count differs from vertex count")
    return issues


# --- k in {9, 10} --------------------------------------------------------------

def _no_satellites(cv: ComponentView, k: int, alpha: Surd, log, name="no_satellites") -> PathPartition:
    seq = list(cv.center)
    pp = _cut(seq, k)
    log.record(name, pp.num_edges, alpha * cv.f_edges, cv.f_edges)
    return pp


def _anchor_runs_910(cv: ComponentView, k: int, log) -> PathPartition:
    """Path center without 2-anchors: split before every 1-anchor."""
    ones = [i for i in range(cv.length) if cv.degree(i) == 1]
    out = PathPartition([], k)
    if ones[0] > 0:
        head = split_segment(cv, 1, ones[0])
        out.extend(_no_satellites(head, k, FOUR_FIFTHS, log, "leading_run"))
    bounds = ones + [cv.length]
    for a, b in zip(bounds, bounds[1:]):
        seq = _pair(cv.sats[a][0], _center_seq(cv, a, b - 1))
        pp = cut_to_kpp(seq, k, log=log)
        f_h = (b - 1 - a) + 4
        log.record("anchored_piece", pp.num_edges, FOUR_FIFTHS * f_h + Fraction(4, 5), f_h, 1)
        out.extend(pp)
    return out


def _one_anchor_split(cv: ComponentView, k: int, log) -> PathPartition:
    if cv.is_cycle:
        first = next(i for i in range(cv.length) if cv.degree(i) == 1)
        rot = rotate(cv, first)
        as_path = split_segment(rot, 1, rot.length)
        pp = _anchor_runs_910(as_path, k, log)
        bound = FOUR_FIFTHS * cv.f_edges
    else:
        pp = _anchor_runs_910(cv, k, log)
        bound = FOUR_FIFTHS * cv.f_edges
        if cv.degree(0) == 1:
            bound = bound + Fraction(4, 5)
    log.record("one_anchor_split", pp.num_edges, bound, cv.f_edges, cv.ones)
    return pp


def _double_anchor_split(cv: ComponentView, k: int, log) -> PathPartition:
    work = cv
    if cv.is_cycle:
        work = split_segment(rotate(cv, cv.twos[0]), 1, cv.length)
    twos = work.twos
    out = PathPartition([], k)
    for t in twos:
        a, b = work.sats[t]
        seq = _pair(a, [work.center[t]], b)
        if len(seq) > k:
            raise StructureError("double-anchor piece longer than k")
        pp = PathPartition([tuple(seq)], k)
        f_h = a.size + b.size
        log.record("double_anchor_piece", pp.num_edges, FOUR_FIFTHS * f_h + Fraction(8, 5), f_h)
        out.extend(pp)
    cuts = set(twos)
    i = 0
    while i < work.length:
        if i in cuts:
            i += 1
            continue
        j = i
        while j + 1 < work.length and j + 1 not in cuts:
            j += 1
        seg = split_segment(work, i + 1, j + 1)
        out.extend(build_910(seg, k, log)[0])
        i = j + 1
    log.record("double_anchor_split", out.num_edges, FOUR_FIFTHS * cv.f_edges, cv.f_edges, cv.ones)
    return out


def build_910(cv: ComponentView, k: int, log=None) -> tuple[PathPartition, EdgeGuarantee]:
    """k-pp of a component (or segment) with at least 4/5 of its F-edges, for k in {9, 10}."""
    if k not in (9, 10):
        raise ValueError("build_910 handles k in {9, 10}")
    log = _log(log)
    if cv.critical == "I4":
        raise ValueError("unsaturated 4-cycles are handled by the caller")
    for s in cv.satellites():
        if s.size != 4:
            raise StructureError("for k in {9, 10} every satellite must be a 4-cycle")
    if not cv.satellites():
        pp = _no_satellites(cv, k, FOUR_FIFTHS, log)
    elif not cv.twos:
        pp = _one_anchor_split(cv, k, log)
    else:
        pp = _double_anchor_split(cv, k, log)
    return pp, log[-1]


# --- k >= 11 -------------------------------------------------------------------

def _rbound(f_edges: int, ones: int, extra=0) -> Surd:
    return R * f_edges + (5 - 6 * R) * ones + extra


def detect_special(cv: ComponentView):
    """Classify a path-center piece without 2-anchors as special type 1-4.

    Returns ``None`` or a tuple ``("S1",)``, ``("S2",)``, ``("S3",)``,
    ``("S4", i)`` where ``i`` counts the leading 1-anchors.
    """
    if cv.is_cycle or cv.twos or cv.length == 0:
        return None
    d = [cv.degree(i) for i in range(cv.length)]

    def sz(i):
        return cv.sats[i][0].size

    if d[0] != 1 or sz(0) != 4:
        return None
    ell = cv.length
    if ell == 2 and d[1] == 1 and sz(1) == 5:
        return ("S1",)
    if ell == 3 and d[1] == 0 and d[2] == 1 and sz(2) == 4:
        return ("S2",)
    if ell == 4 and d[2] == 0 and d[1] == 1 and d[3] == 1 and sz(1) == 4 and sz(3) == 5:
        return ("S3",)
    i = 0
    while i < ell and d[i] == 1:
        i += 1
    if all(x == 0 for x in d[i:]) and all(sz(t) == 4 for t in range(i)):
        return ("S4", i)
    return None


def _special(cv: ComponentView, k: int, log) -> PathPartition:
    """Constructions for special pieces; record the bound their argument gives."""
    kind = detect_special(cv)
    if kind is None:
        raise StructureError("piece is not special")
    s = cv.sats
    c = cv.center
    f, o = cv.f_edges, cv.ones
    if kind[0] in ("S1", "S2"):
        pp = PathPartition([tuple(_pair(s[0][0], c, s[-1][0]))], k)
        log.record(f"special_{kind[0].lower()}", pp.num_edges, _rbound(f, o, 2 * R), f, o)
        return pp
    if kind[0] == "S3":
        pp = PathPartition([tuple(_pair(s[0][0], c[:2], s[1][0])),
                            tuple(list(c[2:]) + s[3][0].opened()[::-1])], k)
        log.record("special_s3", pp.num_edges, _rbound(f, o, 2 * R), f, o)
        return pp
    i = kind[1]
    ell = cv.length
    if i == 4 and ell == 4:
        pp = PathPartition([tuple(_pair(s[0][0], c[:2], s[1][0])),
                            tuple(_pair(s[2][0], c[2:4], s[3][0]))], k)
        log.record("special_s4_full", pp.num_edges, _rbound(f, o, 2 * R), f, o)
        return pp
    if i == 1 and ell >= 2:
        pp = cut_to_kpp(_pair(s[0][0], c), k, log=log)
        log.record("single_leading_anchor", pp.num_edges, _rbound(f, o, R), f, o)
        return pp
    if i == 2 and ell != 3:
        head = _pair(s[0][0], c[:2], s[1][0])
        pp = PathPartition([tuple(head)], k)
        if ell > 2:
            pp.extend(cut_to_kpp(c[2:], k, log=log))
        log.record("two_leading_anchors", pp.num_edges, _rbound(f, o, R), f, o)
        return pp
    raise StructureError(f"special piece {kind} with center order {ell} has no construction")


def _lone(cv: ComponentView, k: int, log) -> PathPartition:
    pp = cut_to_kpp(cv.center, k, log=log)
    log.record("no_satellites", pp.num_edges, R * cv.f_edges, cv.f_edges)
    return pp


def _trailing_anchor(cv: ComponentView, k: int, log) -> PathPartition:
    """0-anchors followed by one final 1-anchor: walk the center into the satellite."""
    last = cv.sats[-1][0]
    seq = list(cv.center) + last.opened()[::-1]
    pp = cut_to_kpp(seq, k, log=log)
    log.record("trailing_anchor", pp.num_edges, _rbound(cv.f_edges, cv.ones, R), cv.f_edges, cv.ones)
    return pp


def _leading_anchor_run(cv: ComponentView, k: int, log, name) -> PathPartition:
    """A 1-anchor v_1 followed by 0-anchors only: open the satellite in front."""
    seq = _pair(cv.sats[0][0], cv.center)
    pp = cut_to_kpp(seq, k, log=log)
    log.record(name, pp.num_edges, _rbound(cv.f_edges, cv.ones, R), cv.f_edges, cv.ones)
    return pp


def _path_center_segmentation(cv: ComponentView, k: int, log) -> PathPartition:
    ell = cv.length
    d = [cv.degree(i) for i in range(ell)]
    if cv.twos:
        raise StructureError("path-center segmentation needs a piece without 2-anchors")
    if not any(d):
        return _lone(cv, k, log)
    out = PathPartition([], k)
    i = 0
    while True:
        if i == ell - 1 or not any(d[i:]):
            seg = split_segment(cv, i + 1, ell)
            if not any(d[i:]):
                out.extend(_lone(seg, k, log))
            else:
                sat = seg.sats[0][0]
                pp = PathPartition([tuple(_pair(sat, seg.center))], k)
                log.record("final_anchor", pp.num_edges,
                           _rbound(seg.f_edges, seg.ones), seg.f_edges, seg.ones)
                out.extend(pp)
            break
        if d[i] == 1 and cv.sats[i][0].size == 5:
            j = i
            seg = split_segment(cv, i + 1, j + 1)
            out.extend(_leading_anchor_run(seg, k, log, "five_cycle_anchor"))
        elif d[i] == 1:
            j = i + 1
            seg = split_segment(cv, i + 1, j + 1)
            out.extend(_special(seg, k, log))
        else:
            j = next(t for t in range(i, ell) if d[t] == 1)
            seg = split_segment(cv, i + 1, j + 1)
            out.extend(_trailing_anchor(seg, k, log))
        if j == ell - 1:
            break
        i = j + 1
    log.record("path_center_segmentation", out.num_edges,
               _rbound(cv.f_edges, cv.ones), cv.f_edges, cv.ones)
    return out


def _five_cycle_satellites_cycle(cv: ComponentView, k: int, log) -> PathPartition:
    """Cycle center whose satellites are all 5-cycles: split before each 1-anchor."""
    first = next(i for i in range(cv.length) if cv.degree(i) == 1)
    rot = rotate(cv, first)
    ones = [i for i in range(rot.length) if rot.degree(i) == 1]
    bounds = ones + [rot.length]
    out = PathPartition([], k)
    for a, b in zip(bounds, bounds[1:]):
        seg = split_segment(rot, a + 1, b)
        out.extend(_leading_anchor_run(seg, k, log, "five_cycle_anchor"))
    log.record("five_cycle_satellites", out.num_edges,
               _rbound(cv.f_edges, cv.ones), cv.f_edges, cv.ones)
    return out


def _cycle_case(cv: ComponentView):
    """First of the four prefix patterns found at the smallest rotation, or None."""
    ell = cv.length
    d = [cv.degree(i) for i in range(ell)]

    def size(i):
        i %= ell
        return cv.sats[i][0].size if d[i] == 1 else 0

    def deg(i):
        return d[i % ell]

    for i in range(ell):
        if size(i) == 4 and size(i + 1) == 5:
            return 1, i
    for i in range(ell):
        if size(i) == 4 and deg(i + 1) == 0 and size(i + 2) == 4:
            return 2, i
    for i in range(ell):
        if size(i) == 4 and size(i + 1) == 4 and deg(i + 2) == 0 and size(i + 3) == 5:
            return 3, i
    for i in range(ell):
        if all(size(i + t) == 4 for t in range(4)):
            return 4, i
    return None


def _cycle_center_segmentation(cv: ComponentView, k: int, log) -> PathPartition:
    ell = cv.length
    d = [cv.degree(i) for i in range(ell)]
    if not any(d):
        pp = cut_to_kpp(cv.center, k, cycle=True, log=log)
        log.record("no_satellites", pp.num_edges, R * cv.f_edges, cv.f_edges)
        return pp
    if all(s.size == 5 for s in cv.satellites()):
        return _five_cycle_satellites_cycle(cv, k, log)
    out = PathPartition([], k)
    found = _cycle_case(cv)
    if found is not None:
        case, i = found
        rot = rotate(cv, i)
        width = {1: 2, 2: 3, 3: 4, 4: 4}[case]
        head = split_segment(rot, 1, width)
        out.extend(_special(head, k, log))
        if width < ell:
            tail = split_segment(rot, width + 1, ell)
            out.extend(_path_center_segmentation(tail, k, log))
    else:
        # pick v_l a 0-anchor and v_1 a 1-anchor
        s = next((i for i in range(ell) if d[i] == 1 and d[i - 1] == 0), None)
        if s is None:
            raise StructureError("cycle center without a 0-anchor after the prefix cases")
        rot = rotate(cv, s)
        rd = [rot.degree(t) for t in range(ell)]

        def size(t):
            return rot.sats[t][0].size

        def zero_run_end(start):
            j = start
            while j + 1 < ell and rd[j + 1] == 0:
                j += 1
            return j

        i = 0
        while True:
            if rd[i] != 1:
                raise StructureError("segmentation lost its 1-anchor invariant")
            if size(i) == 5 or rd[i + 1] == 0:
                j = zero_run_end(i)
                seg = split_segment(rot, i + 1, j + 1)
                name = "five_cycle_anchor" if size(i) == 5 else "single_leading_anchor"
                out.extend(_leading_anchor_run(seg, k, log, name))
            else:
                if size(i + 1) != 4 or i + 2 > ell - 1:
                    raise StructureError("unexpected pattern after a 4-cycle 1-anchor")
                if rd[i + 2] == 1:
                    j = i + 1
                else:
                    if i + 3 > ell - 1 or rd[i + 3] != 0:
                        raise StructureError("expected two 0-anchors after a 4-cycle pair")
                    j = zero_run_end(i + 2)
                seg = split_segment(rot, i + 1, j + 1)
                out.extend(_special(seg, k, log))
            if j == ell - 1:
                break
            i = j + 1
    log.record("cycle_center_segmentation", out.num_edges,
               _rbound(cv.f_edges, cv.ones), cv.f_edges, cv.ones)
    return out


def _balanced(cv: ComponentView, k: int, log) -> PathPartition:
    t = cv.twos[0]
    rot = rotate(cv, t)
    a, b = rot.sats[0]
    pp = PathPartition([tuple(_pair(a, [rot.center[0]], b)), tuple(rot.center[1:])], k)
    log.record("balanced", pp.num_edges, R * cv.f_edges + 5 - 6 * R, cv.f_edges)
    return pp


def build_11(cv: ComponentView, k: int, log=None) -> tuple[PathPartition, EdgeGuarantee]:
    """k-pp of a non-critical component without unbalanced 2-anchors, for k >= 11."""
    if k < 11:
        raise ValueError("build_11 handles k >= 11")
    log = _log(log)
    if cv.critical:
        raise ValueError("critical short cycles are handled by the caller")
    if cv.twos:
        if not cv.balanced:
            raise ValueError("2-anchors of unbalanced components must be detached first")
        pp = _balanced(cv, k, log)
    elif cv.is_cycle:
        pp = _cycle_center_segmentation(cv, k, log)
    else:
        pp = _path_center_segmentation(cv, k, log)
    return pp, log[-1]


def cluster_path(anchor: int, a: Satellite, b: Satellite, k: int, log=None) -> PathPartition:
    """One path through a 2-anchor and both of its satellites."""
    seq = _pair(a, [anchor], b)
    if len(seq) > k:
        raise StructureError("cluster path longer than k")
    pp = PathPartition([tuple(seq)], k)
    if log is not None:
        promised = 8 if a.size == b.size == 4 else 9
        log.record("cluster_path", pp.num_edges, promised, a.size + b.size)
    return pp


def partition_edges(pp: PathPartition) -> set:
    return {norm_edge(a, b) for p in pp.paths for a, b in zip(p, p[1:])}
