import math

import pytest
from hypothesis import given, strategies as st

from kpp.builders import (
    GuaranteeLog,
    PathPartition,
    build_11,
    build_910,
    cluster_path,
    cut_edges,
    cut_to_kpp,
    detect_special,
    verify_partition,
)
from kpp.exact import R, Surd
from kpp.graph import Graph
from kpp.structure import StructureError, combine_and_decompose
from helpers import assemble, cycle_graph, path_graph


def view(center_len, kind="path", sats=(), k=11):
    g, f, w, cycles, _ = assemble(center_len, kind, sats)
    views = combine_and_decompose(f, w, k).views
    assert len(views) == 1
    return g, views[0]


def check(g, cv, pp, k):
    assert verify_partition(pp, g, k, vertices=cv.vertices) == []


def test_cut_23_path():
    pp = cut_to_kpp(23, 9)
    assert [len(p) for p in pp.paths] == [9, 9, 5]
    assert pp.num_edges == 20 == 23 - math.ceil(23 / 9)


def test_cut_short_path_untouched():
    pp = cut_to_kpp(5, 9)
    assert pp.paths == [(0, 1, 2, 3, 4)] and pp.num_edges == 4


def test_cut_six_cycle():
    pp = cut_to_kpp(6, 11, cycle=True)
    assert pp.num_paths == 1 and pp.num_edges == 5


def test_cut_rejects_triangle():
    with pytest.raises(ValueError):
        cut_to_kpp(3, 9, cycle=True)


@pytest.mark.parametrize("k", range(9, 21))
def test_cut_edge_count_formula(k):
    for ell in range(1, 201):
        pp = cut_to_kpp(ell, k)
        assert pp.num_edges == cut_edges(ell, k)
        if ell > k:
            assert pp.num_edges == ell - math.ceil(ell / k)
            # long paths keep at least a (k-1)/(k+1) share
            assert (ell - math.ceil(ell / k)) * (k + 1) >= (k - 1) * ell
        else:
            assert pp.num_edges == ell - 1


@pytest.mark.parametrize("k, num, den, start", [(9, 4, 5, 5), (10, 4, 5, 5), (11, 5, 6, 6), (15, 5, 6, 6)])
def test_cut_share_bounds(k, num, den, start):
    for ell in range(start, 120):
        assert cut_edges(ell, k) * den >= num * ell


def test_cut_logs_bound():
    log = GuaranteeLog()
    cut_to_kpp(30, 11, log=log)
    assert log[-1].construction == "cut" and log[-1].holds


# --- k in {9, 10} ---

def test_three_cycle_piece_example():
    # 4-cycle center with single 4-cycles at v1 and v2
    g, cv = view(4, "cycle", ((0, 4), (1, 4)), k=9)
    assert cv.f_edges == 12
    log = GuaranteeLog()
    pp, guar = build_910(cv, 9, log)
    check(g, cv, pp, 9)
    assert sorted(len(p) - 1 for p in pp.paths) == [4, 6]
    assert guar.construction == "one_anchor_split" and guar.holds


def test_nine_path_alone():
    g = path_graph(9)
    _, cv = view(9, k=9)
    pp, guar = build_910(cv, 9)
    assert pp.paths == [tuple(range(9))] and guar.achieved == 8


def test_double_anchor_component():
    g, cv = view(3, sats=((0, 4), (0, 4), (1, 4)), k=9)
    assert cv.f_edges == 14
    log = GuaranteeLog()
    pp, guar = build_910(cv, 9, log)
    check(g, cv, pp, 9)
    piece = next(x for x in log if x.construction == "double_anchor_piece")
    assert piece.achieved == 8
    assert pp.num_edges >= math.ceil(4 / 5 * 14)
    assert not log.violations()


def test_build_910_rejects_critical_and_five_cycles():
    _, cv = view(4, "cycle", k=9)
    with pytest.raises(ValueError):
        build_910(cv, 9)
    _, cv = view(6, sats=((1, 5),), k=11)
    with pytest.raises(StructureError):
        build_910(cv, 9)


# --- special pieces ---

@pytest.mark.parametrize(
    "center, sats, expected",
    [
        (2, ((0, 4), (1, 5)), ("S1",)),
        (3, ((0, 4), (2, 4)), ("S2",)),
        (4, ((0, 4), (1, 4), (3, 5)), ("S3",)),
        (2, ((0, 4),), ("S4", 1)),
        (5, ((0, 4), (1, 4)), ("S4", 2)),
        (3, ((0, 4), (1, 4)), ("S4", 2)),
        (3, ((0, 4), (1, 4), (2, 4)), ("S4", 3)),
        (4, ((0, 4), (2, 4)), None),
        (3, ((1, 4),), None),
        (2, ((0, 5),), None),
    ],
)
def test_detect_special(center, sats, expected):
    _, cv = view(center, sats=sats)
    assert detect_special(cv) == expected


def test_special_type1_is_one_path():
    g, cv = view(2, sats=((0, 4), (1, 5)))
    assert cv.f_edges == 10 and cv.ones == 2
    log = GuaranteeLog()
    pp, guar = build_11(cv, 11, log)
    check(g, cv, pp, 11)
    assert pp.num_paths == 1 and pp.num_edges == 10
    # 10 = 10 r + 2 r + 2 (5 - 6 r): the piece bound is tight
    piece = next(x for x in log if x.construction == "special_s1")
    assert piece.promised == Surd.lift(10)
    assert guar.promised == R * 10 + (5 - 6 * R) * 2


def test_balanced_component():
    g, cv = view(4, "cycle", sats=((0, 4), (0, 4)))
    assert cv.balanced and cv.f_edges == 12
    pp, guar = build_11(cv, 11)
    check(g, cv, pp, 11)
    assert pp.num_edges == 10
    assert guar.construction == "balanced"
    assert guar.promised == R * 12 + 5 - 6 * R and guar.holds


def test_two_path_with_one_four_cycle():
    g, cv = view(2, sats=((0, 4),))
    log = GuaranteeLog()
    pp, _ = build_11(cv, 11, log)
    check(g, cv, pp, 11)
    assert pp.num_paths == 1 and pp.num_edges == 5
    # 5 r + r + (5 - 6 r) = 5
    piece = next(x for x in log if x.construction == "single_leading_anchor")
    assert piece.promised == Surd.lift(5)


def test_build_11_errors():
    _, cv = view(5, "cycle")
    with pytest.raises(ValueError):
        build_11(cv, 11)
    _, cv = view(6, sats=((2, 4), (2, 5)))
    with pytest.raises(ValueError):
        build_11(cv, 11)
    with pytest.raises(ValueError):
        build_11(cv, 10)


def test_cluster_path():
    g, cv = view(6, sats=((2, 5), (2, 5)))
    a, b = cv.sats[2]
    log = GuaranteeLog()
    pp = cluster_path(cv.center[2], a, b, 11, log)
    assert pp.num_paths == 1 and len(pp.paths[0]) == 11
    assert verify_partition(pp, g, 11, vertices={2} | set(a.cycle) | set(b.cycle)) == []
    assert log[-1].construction == "cluster_path" and log[-1].holds


# --- verification ---

def test_verify_valid():
    assert verify_partition(PathPartition([(0, 1, 2), (3,)], 3), path_graph(4), 3) == []


def test_verify_over_length():
    issues = verify_partition(PathPartition([(0, 1, 2, 3)], 3), path_graph(4), 3)
    assert any("over-length" in s for s in issues)


def test_verify_duplicate():
    issues = verify_partition(PathPartition([(2, 3), (3, 4), (0, 1)], 3), path_graph(5), 3)
    assert any("duplicate vertex 3" in s for s in issues)


def test_verify_non_adjacent_and_missing():
    issues = verify_partition(PathPartition([(0, 2)], 3), path_graph(4), 3)
    assert any("non-adjacent" in s for s in issues)
    assert any("missing vertices [1, 3]" in s for s in issues)


def test_partition_labels_and_canonical():
    pp = PathPartition([(3, 2), (0, 1)], 2)
    assert pp.canonical() == [(0, 1), (2, 3)]
    assert pp.labels(4) == [1, 1, 0, 0]


@given(st.lists(st.sampled_from([4, 5]), max_size=5), st.integers(1, 8), st.data())
def test_build_11_guarantees_on_one_anchor_paths(sizes, center_len, data):
    # at most one satellite per center vertex
    positions = data.draw(st.lists(st.integers(0, center_len - 1), min_size=len(sizes),
                                   max_size=len(sizes), unique=True)) if len(sizes) <= center_len else []
    sats = tuple(zip(positions, sizes))
    g, f, w, _, _ = assemble(center_len, "path", sats)
    views = combine_and_decompose(f, w, 11).views
    for cv in views:
        if cv.critical:
            continue
        log = GuaranteeLog()
        pp, _ = build_11(cv, 11, log)
        check(g, cv, pp, 11)
        assert not log.violations(), [x.to_dict() for x in log.violations()]


@given(st.integers(4, 9), st.lists(st.integers(0, 8), max_size=4, unique=True))
def test_build_910_guarantees_on_cycles(center_len, positions):
    sats = tuple((p, 4) for p in positions if p < center_len)
    g, f, w, _, _ = assemble(center_len, "cycle", sats)
    for cv in combine_and_decompose(f, w, 9).views:
        if cv.critical:
            continue
        log = GuaranteeLog()
        pp, _ = build_910(cv, 9, log)
        check(g, cv, pp, 9)
        assert not log.violations()
