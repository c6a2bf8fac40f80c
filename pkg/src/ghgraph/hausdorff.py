"""Hausdorff distances between subsets of a metric graph, computed exactly.

Finite-to-finite distances are vectorized pair scans. Distances from the
whole graph (or from a region given by edge intervals) are suprema of
continuum quantities: on each edge the distance to a finite source set is
a lower envelope of functions that are affine with slopes +1 or -1, so
the supremum sits at an endpoint or where an ascending piece crosses a
descending one. Those crossings form a small closed-form candidate set,
which is evaluated exactly; nothing is sampled.
"""

from __future__ import annotations

from bisect import bisect_left

import numpy as np

from .errors import EmptyRegion, EmptySet
from .graph import (
    EdgeIntervalSet,
    GraphPoint,
    MetricGraph,
    PointSet,
    _chunk_matrix,
    _fields,
    boundary,
    edge_point,
    pairwise_distances,
)

__all__ = [
    "directed_hausdorff_sets",
    "hausdorff_sets",
    "hausdorff_graph_to_set",
    "hausdorff_graph_to_region",
    "directed_hausdorff_boundary",
]

_CHUNK = 1024


def _directed_both(G: MetricGraph, A: PointSet, B: PointSet) -> tuple[float, float]:
    """(sup_a d(a,B), sup_b d(b,A)) in one streamed pass over the pair matrix."""
    pa, pb = list(A), list(B)
    if not pa or not pb:
        raise EmptySet("Hausdorff distance against an empty point set")
    fa = _fields(G, pa)
    fb = _fields(G, pb)
    a_to_b = 0.0
    col_min = np.full(len(pb), np.inf)
    for start in range(0, len(pa), _CHUNK):
        rows = np.arange(start, min(start + _CHUNK, len(pa)))
        block = _chunk_matrix(G, fa, fb, rows)
        a_to_b = max(a_to_b, float(block.min(axis=1).max()))
        np.minimum(col_min, block.min(axis=0), out=col_min)
    return a_to_b, float(col_min.max())


def directed_hausdorff_sets(G: MetricGraph, A: PointSet, B: PointSet) -> float:
    """sup over a in A of the distance from a to the nearest point of B."""
    return _directed_both(G, A, B)[0]


def hausdorff_sets(G: MetricGraph, A: PointSet, B: PointSet) -> float:
    """Symmetric Hausdorff distance: the larger of the two directed values."""
    d_ab, d_ba = _directed_both(G, A, B)
    return max(d_ab, d_ba)


# --------------------------------------------------------------------------
# distances from the continuum

# For a point at offset s on edge e = (u, v, l) and a finite source set A,
#   d(s, A) = min( s + d(u, A),  (l - s) + d(v, A),  min_t |s - t| )
# with t ranging over source offsets on e itself: any geodesic either exits
# through an endpoint (reaching the set optimally from there) or stays
# inside the edge. The candidate maxima are crossings between the ascending
# pieces {s + d(u,A), s - t} and the descending ones {(l-s) + d(v,A), t - s}.


def _edge_envelope_max(
    l: float,
    au: float,
    av: float,
    ts: list[float],
    excluded: list[tuple[float, float]] | None = None,
) -> float:
    def value(s: float) -> float:
        if excluded:
            for lo, hi in excluded:
                if lo <= s <= hi:
                    return 0.0
        best = min(s + au, (l - s) + av)
        if ts:
            k = bisect_left(ts, s)
            if k < len(ts):
                best = min(best, ts[k] - s)
            if k > 0:
                best = min(best, s - ts[k - 1])
        return best

    cands = [0.0, l, (l + av - au) / 2.0]
    for t in ts:
        cands.append((t - au) / 2.0)
        cands.append((l + av + t) / 2.0)
        cands.append(t)
    for t1, t2 in zip(ts, ts[1:]):
        cands.append((t1 + t2) / 2.0)
    if excluded:
        for lo, hi in excluded:
            cands.append(lo)
            cands.append(hi)
    best = 0.0
    for s in cands:
        if 0.0 <= s <= l:
            val = value(s)
            if val > best:
                best = val
    return best


def _sup_distance_to_sources(
    G: MetricGraph,
    sources: PointSet,
    excluded_by_edge: dict[str, list[tuple[float, float]]] | None = None,
) -> float:
    all_vertices = [GraphPoint(vertex=v) for v in G.vertices]
    vdist = pairwise_distances(G, all_vertices, sources).min(axis=1)
    if not G.edges:
        return float(vdist.max())
    on_edge: dict[str, list[float]] = {}
    for p in sources:
        if p.edge is not None:
            on_edge.setdefault(p.edge, []).append(p.offset)
    best = 0.0
    for e in G.edges:
        ts = sorted(on_edge.get(e.id, ()))
        excluded = (excluded_by_edge or {}).get(e.id)
        val = _edge_envelope_max(
            e.length,
            float(vdist[G.vertex_index[e.u]]),
            float(vdist[G.vertex_index[e.v]]),
            ts,
            excluded,
        )
        if val > best:
            best = val
    return best


def hausdorff_graph_to_set(G: MetricGraph, A: PointSet) -> float:
    """sup over all points of the graph of the distance to the finite set A.

    Equals the Hausdorff distance between the whole graph and A, since the
    other direction vanishes.
    """
    if len(A) == 0:
        raise EmptySet("Hausdorff distance to an empty point set")
    return _sup_distance_to_sources(G, A)


def hausdorff_graph_to_region(G: MetricGraph, W: EdgeIntervalSet) -> float:
    """sup over the graph of the distance to the closure of the region W."""
    if W.is_empty:
        raise EmptyRegion("Hausdorff distance to an empty region")
    pts: list[GraphPoint] = [GraphPoint(vertex=v) for v in W.vertices]
    excluded: dict[str, list[tuple[float, float]]] = {}
    for eid, ivs in W.intervals.items():
        for lo, hi in ivs:
            pts.append(edge_point(G, eid, lo))
            pts.append(edge_point(G, eid, hi))
            excluded.setdefault(eid, []).append((lo, hi))
    sources = PointSet(pts)
    return _sup_distance_to_sources(G, sources, excluded)


def directed_hausdorff_boundary(G: MetricGraph, A: PointSet) -> float:
    """sup over degree-one vertices of the distance to A; 0 when none exist."""
    if len(A) == 0:
        raise EmptySet("Hausdorff distance from the boundary to an empty set")
    leaves = boundary(G)
    if not leaves:
        return 0.0
    leaf_points = [GraphPoint(vertex=v) for v in leaves]
    return float(pairwise_distances(G, leaf_points, A).min(axis=1).max())
