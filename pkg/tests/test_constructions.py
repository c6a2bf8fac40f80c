import math

import numpy as np
import pytest

import ghgraph as gg

from _brute import circle_arc_distance

TAU = 1e-9
PI = math.pi
L = 2 * PI


# --------------------------------------------------------------------------
# star counterexample


def test_star_counterexample_rejects_degenerate():
    for n in (1, 0, -3):
        with pytest.raises(gg.ValidationError):
            gg.star_counterexample(n)


@pytest.mark.parametrize("n", [2, 4, 7])
def test_star_counterexample_distances(n):
    T, X, Xc = gg.star_counterexample(n)
    assert gg.hausdorff_graph_to_region(T, X) == pytest.approx(1.0, abs=TAU)
    assert gg.hausdorff_graph_to_region(T, Xc) == pytest.approx(1.0 / n, abs=TAU)


def test_star_counterexample_shape():
    n = 4
    T, X, Xc = gg.star_counterexample(n)
    lengths = sorted(e.length for e in T.edges)
    assert lengths == pytest.approx([1.0 + t / n for t in range(1, n + 1)])
    # the truncated ray keeps only its first unit; every other ray is full
    spans = sorted(hi - lo for iv in X.intervals.values() for lo, hi in iv)
    assert spans == pytest.approx([1.0, 1.25, 1.5, 1.75])
    spans_c = sorted(hi - lo for iv in Xc.intervals.values() for lo, hi in iv)
    assert spans_c == pytest.approx([1.0, 1.25, 1.5, 1.75])


@pytest.mark.parametrize("n", [2, 4])
def test_star_counterexample_regions_isometric(n):
    T, X, Xc = gg.star_counterexample(n)
    delta = 1.0 / (4 * n)
    MA = gg.restrict_metric(T, gg.region_net(T, X, delta))
    MB = gg.restrict_metric(T, gg.region_net(T, Xc, delta))
    ok, _ = gg.is_isometric(MA, MB)
    assert ok


def test_star_counterexample_ratio():
    # the certified GH/H ratio collapses like 1/n
    for n in (4, 8):
        T, X, Xc = gg.star_counterexample(n)
        upper = gg.hausdorff_graph_to_region(T, Xc)  # isometry transport
        lower = gg.hausdorff_graph_to_region(T, X)
        assert upper / lower == pytest.approx(1.0 / n, abs=TAU)


def test_region_net_deterministic_and_covering():
    T, X, _ = gg.star_counterexample(4)
    a = gg.region_net(T, X, 0.1)
    b = gg.region_net(T, X, 0.1)
    assert a.points == b.points
    # every region vertex appears in the net
    for v in X.vertices:
        assert any(p.vertex == v for p in a.points)


# --------------------------------------------------------------------------
# six-point circle instance


@pytest.mark.parametrize("eps", [0.05, 0.1, 0.2])
def test_circle_six_point_verified_quantities(circle, eps):
    X, R = gg.circle_six_point(eps)
    assert len(X.points) == 6
    assert gg.hausdorff_graph_to_set(circle, X) == pytest.approx(PI / 3 + eps, abs=TAU)
    assert gg.arc_correspondence_distortion(R, X, circle) == pytest.approx(
        2 * PI / 3, abs=TAU
    )
    cert = gg.circle_bound(circle, X)
    assert cert.value == pytest.approx(PI / 3, abs=TAU)


def test_circle_six_point_gap_structure():
    eps = 0.1
    X, R = gg.circle_six_point(eps)
    offs = sorted(p.offset if p.edge else 0.0 for p in X.points)
    gaps = [b - a for a, b in zip(offs, offs[1:])] + [L - offs[-1] + offs[0]]
    # two fixed thirds, a split pair summing to pi/2 - eps, the wide gap, the sliver
    assert gaps[0] == pytest.approx(PI / 3, abs=TAU)
    assert gaps[1] == pytest.approx(PI / 3, abs=TAU)
    assert gaps[2] + gaps[3] == pytest.approx(PI / 2 - eps, abs=TAU)
    assert gaps[4] == pytest.approx(2 * PI / 3 + 2 * eps, abs=TAU)
    assert gaps[5] == pytest.approx(PI / 6 - eps, abs=TAU)
    arc_lengths = [hi - lo for (lo, hi), _ in R.assignments]
    third = 2 * PI / 3 - 2 * eps
    sixth = PI / 6 + eps
    assert arc_lengths == pytest.approx([sixth, sixth, third, sixth, sixth, third])
    # arcs tile the circle and land on all six points
    assert R.assignments[0][0][0] == pytest.approx(0.0)
    for (a, b), (c, d) in zip(
        [arc for arc, _ in R.assignments], [arc for arc, _ in R.assignments][1:]
    ):
        assert b == pytest.approx(c, abs=TAU)
    assert sorted(idx for _, idx in R.assignments) == list(range(6))


def test_circle_six_point_epsilon_range():
    for bad in (0.0, PI / 6, -0.2, 1.0):
        with pytest.raises(gg.EpsilonOutOfRange):
            gg.circle_six_point(bad)


def test_circle_six_point_split_handling():
    eps = 0.1
    # the documented default split passes verification when given explicitly
    explicit = gg.circle_six_point(eps, split=(PI / 3, PI / 6 - eps))
    default = gg.circle_six_point(eps)
    assert [p for p in explicit[0].points] == [p for p in default[0].points]
    # the symmetric split produces a correspondence with too much distortion
    half = (PI / 2 - eps) / 2
    with pytest.raises(gg.ConstructionVerificationFailed):
        gg.circle_six_point(eps, split=(half, half))
    # malformed splits are rejected before any verification runs
    with pytest.raises(gg.ValidationError):
        gg.circle_six_point(eps, split=(-0.1, PI / 2 - eps + 0.1))
    with pytest.raises(gg.ValidationError):
        gg.circle_six_point(eps, split=(0.2, 0.2))


def test_circle_six_point_sandwich(circle):
    # lower bound pi/3 from the certificate, upper bound pi/3 from the
    # explicit correspondence: the instance pins the GH value exactly
    eps = 0.1
    X, R = gg.circle_six_point(eps)
    lower = gg.circle_bound(circle, X).value
    upper = gg.arc_correspondence_distortion(R, X, circle) / 2.0
    assert lower == pytest.approx(PI / 3, abs=TAU)
    assert upper == pytest.approx(PI / 3, abs=TAU)
    assert gg.hausdorff_graph_to_set(circle, X) > upper + 1e-3


# --------------------------------------------------------------------------
# arc correspondence distortion


def test_arc_distortion_quarter_swap(circle):
    X = gg.point_set(circle, [("loop", 0.0), ("loop", PI)])
    R = gg.ArcCorrespondence(
        (
            ((0.0, PI / 2), 1),
            ((PI / 2, PI), 0),
            ((PI, 3 * PI / 2), 0),
            ((3 * PI / 2, L), 1),
        )
    )
    assert gg.arc_correspondence_distortion(R, X, circle) == pytest.approx(PI, abs=TAU)


def test_arc_distortion_half_cover(circle):
    # one long arc per point: the self-pair alone forces L/2
    X = gg.point_set(circle, [("loop", 0.0), ("loop", PI)])
    R = gg.ArcCorrespondence((((0.0, PI), 0), ((PI, L), 1)))
    assert gg.arc_correspondence_distortion(R, X, circle) == pytest.approx(PI, abs=TAU)


def test_arc_distortion_validation(circle):
    X = gg.point_set(circle, [("loop", 0.0), ("loop", PI)])
    with pytest.raises(gg.NotACorrespondence):  # hole in the cover
        gg.arc_correspondence_distortion(
            gg.ArcCorrespondence((((0.0, PI), 0), ((PI + 0.5, L), 1))), X, circle
        )
    with pytest.raises(gg.NotACorrespondence):  # second point never used
        gg.arc_correspondence_distortion(
            gg.ArcCorrespondence((((0.0, L), 0),)), X, circle
        )
    with pytest.raises(gg.NotACircle):
        gg.arc_correspondence_distortion(
            gg.ArcCorrespondence((((0.0, 1.0), 0),)),
            gg.point_set(gg.segment_graph(0.0, 1.0), ["u"]),
            gg.segment_graph(0.0, 1.0),
        )


def _rotated(R, X, G, shift):
    """Rotate arcs and sample points by a common shift, splitting wrapped arcs."""
    circ = gg.circle_circumference(G)
    specs = []
    for p in X.points:
        off = p.offset if p.edge else 0.0
        specs.append(("loop", (off + shift) % circ))
    moved = gg.point_set(G, specs)
    # the rotated point at index i may land at a different canonical position;
    # recover the index permutation by matching offsets
    new_offs = [q.offset if q.edge else 0.0 for q in moved.points]
    perm = []
    for p in X.points:
        off = (p.offset if p.edge else 0.0) + shift
        target = off % circ
        perm.append(
            min(range(len(new_offs)), key=lambda k: abs(new_offs[k] - target) % circ)
        )
    arcs = []
    for (lo, hi), idx in R.assignments:
        lo2, hi2 = lo + shift, hi + shift
        if lo2 >= circ:
            lo2, hi2 = lo2 - circ, hi2 - circ
        if hi2 <= circ:
            arcs.append(((lo2, hi2), perm[idx]))
        else:  # arc crosses the seam: split it, same target index
            arcs.append(((lo2, circ), perm[idx]))
            arcs.append(((0.0, hi2 - circ), perm[idx]))
    return gg.ArcCorrespondence(tuple(arcs)), moved


@pytest.mark.parametrize("shift", [0.3, 2.0, 5.5])
def test_arc_distortion_rotation_invariant(circle, shift):
    X, R = gg.circle_six_point(0.1)
    base = gg.arc_correspondence_distortion(R, X, circle)
    R2, X2 = _rotated(R, X, circle, shift)
    assert gg.arc_correspondence_distortion(R2, X2, circle) == pytest.approx(
        base, abs=TAU
    )


def test_arc_distortion_vs_sampling(circle):
    # sampled distortion can only undershoot, and by at most the grid step
    X, R = gg.circle_six_point(0.15)
    exact = gg.arc_correspondence_distortion(R, X, circle)
    offs = [p.offset if p.edge else 0.0 for p in X.points]
    h = 0.01
    worst = 0.0
    samples = []
    for (lo, hi), idx in R.assignments:
        k = max(1, int((hi - lo) / h))
        samples.extend(
            (lo + (hi - lo) * i / k, offs[idx]) for i in range(k + 1)
        )
    for s, x in samples:
        for t, y in samples:
            gap = abs(circle_arc_distance(s, t, L) - circle_arc_distance(x, y, L))
            if gap > worst:
                worst = gap
    assert worst - TAU <= exact <= worst + 2 * h


# --------------------------------------------------------------------------
# nets and grids


def test_epsilon_net_segment(segment01):
    net = gg.epsilon_net(segment01, 0.25)
    offs = sorted(p.offset if p.edge else (0.0 if p.vertex == "u" else 1.0) for p in net.points)
    assert offs == pytest.approx([0.0, 0.5, 1.0])
    assert gg.hausdorff_graph_to_set(segment01, net) == pytest.approx(0.25, abs=TAU)


def test_epsilon_net_circle(circle):
    net = gg.epsilon_net(circle, PI / 3)
    assert len(net.points) == 3
    assert gg.hausdorff_graph_to_set(circle, net) == pytest.approx(PI / 3, abs=TAU)


@pytest.mark.parametrize("eps", [0.6, 0.35, 0.2])
def test_epsilon_net_covers(theta345, multi, eps):
    for G in (theta345, multi):
        net = gg.epsilon_net(G, eps)
        assert gg.hausdorff_graph_to_set(G, net) <= eps + TAU


def test_epsilon_net_halving_gives_superset(theta345):
    def keys(ps):
        return {
            (p.vertex, None) if p.vertex else (p.edge, round(p.offset, 9))
            for p in ps.points
        }

    # spacings halve exactly at these levels: every length/(2 eps) is integral
    coarse = gg.epsilon_net(theta345, 0.5)
    fine = gg.epsilon_net(theta345, 0.25)
    finer = gg.epsilon_net(theta345, 0.125)
    assert keys(coarse) <= keys(fine) <= keys(finer)


def test_epsilon_net_rejects_nonpositive(segment01):
    for eps in (0.0, -1.0):
        with pytest.raises(gg.NonPositiveEpsilon):
            gg.epsilon_net(segment01, eps)


def test_grid_coordinates():
    assert gg.grid_coordinates(0.0, 1.0, 0.5) == pytest.approx((0.0, 0.5, 1.0))
    assert gg.grid_coordinates(0.0, 1.0, 2.0) == pytest.approx((0.0, 1.0))
    assert gg.grid_coordinates(0.0, 1.0, 0.3) == pytest.approx(
        (0.0, 0.3, 0.6, 0.9, 1.0)
    )


def test_grid_interval_matches_coordinates():
    ps = gg.grid_interval(0.0, 1.0, 0.5)
    G = gg.segment_graph(0.0, 1.0)
    M = gg.restrict_metric(G, ps)
    ref = gg.FiniteMetricSpace.from_line([0.0, 0.5, 1.0])
    assert np.allclose(M.d, ref.d, atol=TAU)
