import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import ghgraph as gg

TAU = 1e-9


def _random_points(G, rng, k):
    edges = G.edges
    specs = []
    for _ in range(k):
        e = edges[rng.integers(len(edges))]
        specs.append((e.id, float(rng.random()) * e.length))
    return gg.point_set(G, specs)


# --------------------------------------------------------------------------
# set-to-set


def test_directed_values(segment01):
    A = gg.point_set(segment01, [("seg", 0.0)])
    B = gg.point_set(segment01, [("seg", 1.0)])
    assert gg.directed_hausdorff_sets(segment01, A, B) == pytest.approx(1.0)
    assert gg.directed_hausdorff_sets(segment01, B, A) == pytest.approx(1.0)
    AB = gg.point_set(segment01, [("seg", 0.0), ("seg", 1.0)])
    assert gg.directed_hausdorff_sets(segment01, A, AB) == 0.0
    assert gg.directed_hausdorff_sets(segment01, AB, A) == pytest.approx(1.0)


def test_hausdorff_sets_is_max_of_directed(theta345):
    rng = np.random.default_rng(3)
    for _ in range(10):
        A = _random_points(theta345, rng, 5)
        B = _random_points(theta345, rng, 7)
        xy = gg.directed_hausdorff_sets(theta345, A, B)
        yx = gg.directed_hausdorff_sets(theta345, B, A)
        assert gg.hausdorff_sets(theta345, A, B) == pytest.approx(max(xy, yx), abs=TAU)


def test_hausdorff_sets_vs_double_loop(multi):
    # plain python max-min over point_distance, no matrix chunking involved
    rng = np.random.default_rng(11)
    A = _random_points(multi, rng, 23)
    B = _random_points(multi, rng, 17)
    ref_ab = max(
        min(gg.point_distance(multi, p, q) for q in B.points) for p in A.points
    )
    ref_ba = max(
        min(gg.point_distance(multi, p, q) for q in A.points) for p in B.points
    )
    assert gg.hausdorff_sets(multi, A, B) == pytest.approx(max(ref_ab, ref_ba), abs=TAU)


def test_hausdorff_sets_metric_properties(theta345):
    rng = np.random.default_rng(5)
    for _ in range(10):
        A = _random_points(theta345, rng, 4)
        B = _random_points(theta345, rng, 5)
        C = _random_points(theta345, rng, 3)
        ab = gg.hausdorff_sets(theta345, A, B)
        ba = gg.hausdorff_sets(theta345, B, A)
        assert ab == pytest.approx(ba, abs=TAU)
        ac = gg.hausdorff_sets(theta345, A, C)
        cb = gg.hausdorff_sets(theta345, C, B)
        assert ab <= ac + cb + TAU
    same = _random_points(theta345, rng, 6)
    assert gg.hausdorff_sets(theta345, same, same) == 0.0


def test_empty_set_rejected(segment01):
    A = gg.point_set(segment01, [("seg", 0.5)])
    empty = gg.point_set(segment01, [])
    with pytest.raises(gg.EmptySet):
        gg.hausdorff_sets(segment01, A, empty)
    with pytest.raises(gg.EmptySet):
        gg.directed_hausdorff_sets(segment01, empty, A)


# --------------------------------------------------------------------------
# graph-to-set suprema


def test_graph_to_set_segment(segment01):
    X = gg.point_set(segment01, [("seg", 0.25)])
    assert gg.hausdorff_graph_to_set(segment01, X) == pytest.approx(0.75)


def test_graph_to_set_circle_three_points(circle):
    step = 2 * math.pi / 3
    X = gg.point_set(circle, [("loop", i * step) for i in range(3)])
    assert gg.hausdorff_graph_to_set(circle, X) == pytest.approx(math.pi / 3, abs=TAU)


def test_graph_to_set_multi(multi):
    X = gg.point_set(multi, ["u"])
    # supremum attained at the far side of edge a and at the loop antipode
    assert gg.hausdorff_graph_to_set(multi, X) == pytest.approx(2.0)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_graph_to_set_vs_dense_sampling(theta345, seed):
    rng = np.random.default_rng(seed)
    X = _random_points(theta345, rng, 4)
    exact = gg.hausdorff_graph_to_set(theta345, X)
    h = 0.01
    worst = 0.0
    for e in theta345.edges:
        k = int(e.length / h)
        pts = gg.point_set(theta345, [(e.id, i * e.length / k) for i in range(k + 1)])
        D = gg.pairwise_distances(theta345, pts, X)
        worst = max(worst, float(D.min(axis=1).max()))
    # sampling undershoots the supremum by at most the grid step
    assert worst - TAU <= exact <= worst + h


# --------------------------------------------------------------------------
# graph-to-region suprema


def test_graph_to_region_segment(segment01):
    W = gg.region(segment01, {"seg": [(0.4, 0.6)]})
    assert gg.hausdorff_graph_to_region(segment01, W) == pytest.approx(0.4)


def test_graph_to_region_circle_half(circle):
    W = gg.region(circle, {"loop": [(0.0, math.pi)]})
    assert gg.hausdorff_graph_to_region(circle, W) == pytest.approx(
        math.pi / 2, abs=TAU
    )


def test_graph_to_region_multi(multi):
    W = gg.region(multi, {"b": [(0.0, 1.0)]}, ["w"])
    assert gg.hausdorff_graph_to_region(multi, W) == pytest.approx(1.5)


def test_graph_to_region_whole_graph_is_zero(theta345):
    W = gg.whole_graph_region(theta345)
    assert gg.hausdorff_graph_to_region(theta345, W) == pytest.approx(0.0, abs=TAU)


def test_graph_to_region_empty(segment01):
    W = gg.region(segment01, {}, ())
    with pytest.raises(gg.EmptyRegion):
        gg.hausdorff_graph_to_region(segment01, W)


# --------------------------------------------------------------------------
# boundary


def test_boundary_directed(segment01, circle, multi):
    X = gg.point_set(segment01, [("seg", 0.25)])
    assert gg.directed_hausdorff_boundary(segment01, X) == pytest.approx(0.75)
    # boundaryless graphs: supremum over the empty set
    Xc = gg.point_set(circle, ["o"])
    assert gg.directed_hausdorff_boundary(circle, Xc) == 0.0
    Xm = gg.point_set(multi, [("self", 1.0)])
    assert gg.directed_hausdorff_boundary(multi, Xm) == pytest.approx(1.5)


def test_boundary_below_global_supremum(theta345, multi):
    rng = np.random.default_rng(9)
    for G in (theta345, multi):
        for _ in range(5):
            X = _random_points(G, rng, 3)
            b = gg.directed_hausdorff_boundary(G, X)
            h = gg.hausdorff_graph_to_set(G, X)
            assert b <= h + TAU


# --------------------------------------------------------------------------
# properties


@settings(max_examples=40, deadline=None)
@given(
    offs=st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=1, max_size=6),
    extra=st.floats(min_value=0.0, max_value=1.0),
)
def test_directed_monotone_in_target(offs, extra):
    G = gg.segment_graph(0.0, 1.0)
    A = gg.point_set(G, [("seg", 0.1), ("seg", 0.9)])
    B = gg.point_set(G, [("seg", o) for o in offs])
    Bplus = gg.point_set(G, [("seg", o) for o in offs] + [("seg", extra)])
    assert gg.directed_hausdorff_sets(G, A, Bplus) <= (
        gg.directed_hausdorff_sets(G, A, B) + TAU
    )


@settings(max_examples=40, deadline=None)
@given(offs=st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=1, max_size=5))
def test_graph_to_set_dominates_set_to_set(offs):
    G = gg.segment_graph(0.0, 1.0)
    X = gg.point_set(G, [("seg", o) for o in offs])
    whole = gg.point_set(G, [("seg", i / 20.0) for i in range(21)])
    # the continuum supremum dominates any sampled directed distance
    assert gg.directed_hausdorff_sets(G, whole, X) <= (
        gg.hausdorff_graph_to_set(G, X) + TAU
    )
