"""Compact metric graphs and exact geodesic computations on them.

A metric graph is a finite multigraph (self-loops and parallel edges allowed)
whose edges carry positive lengths, equipped with the quotient geodesic
metric: points are vertices or interior positions along an edge, and the
distance between two points is the length of a shortest path through the
graph. Everything here is computed in closed form. Continuum quantities
(diameter, distances from whole edges) reduce to finite candidate sets
because, restricted to one edge, every distance function is piecewise
linear with slopes +1 or -1, so extrema sit at breakpoints, at crossings
of an ascending and a descending piece, or at edge endpoints.

All comparisons against stated hypotheses use the global ``TOLERANCE``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import (
    DisconnectedGraph,
    EmptySet,
    LoopCountGuardExceeded,
    NonPositiveEdgeLength,
    NonPositiveRadius,
    NotACircle,
    PointNotOnGraph,
    UnknownEndpoint,
    ValidationError,
)

TOLERANCE = 1e-9

__all__ = [
    "TOLERANCE",
    "Edge",
    "MetricGraph",
    "build_graph",
    "GraphPoint",
    "vertex_point",
    "edge_point",
    "PointSet",
    "point_set",
    "point_distance",
    "pairwise_distances",
    "distance_to_set",
    "set_diameter",
    "graph_diameter",
    "boundary",
    "smallest_nonterminal_edge",
    "circle_circumference",
    "SimpleLoop",
    "enumerate_simple_loops",
    "EdgeIntervalSet",
    "region",
    "whole_graph_region",
    "thickening",
    "region_is_connected",
]


# --------------------------------------------------------------------------
# graph construction


@dataclass(frozen=True, slots=True)
class Edge:
    """One edge of a metric graph; ``u == v`` makes it a self-loop."""

    id: str
    u: str
    v: str
    length: float

    def other(self, w: str) -> str:
        if w == self.u:
            return self.v
        if w == self.v:
            return self.u
        raise ValueError(f"vertex {w!r} is not an endpoint of edge {self.id!r}")


class MetricGraph:
    """A compact connected metric graph with precomputed vertex distances.

    Instances are built through :func:`build_graph`, which validates the
    input and runs single-source shortest paths from every vertex. The
    resulting matrix backs all point-distance queries, so queries never
    re-run a graph search.
    """

    __slots__ = (
        "vertices",
        "edges",
        "vertex_index",
        "edge_index",
        "vertex_distances",
        "_degree",
        "_incident",
    )

    def __init__(
        self,
        vertices: tuple[str, ...],
        edges: tuple[Edge, ...],
        vertex_distances: np.ndarray,
    ):
        self.vertices = vertices
        self.edges = edges
        self.vertex_index = {v: i for i, v in enumerate(vertices)}
        self.edge_index = {e.id: i for i, e in enumerate(edges)}
        self.vertex_distances = vertex_distances
        degree = {v: 0 for v in vertices}
        incident: dict[str, list[Edge]] = {v: [] for v in vertices}
        for e in edges:
            # a self-loop contributes 2 to the degree of its basepoint
            degree[e.u] += 1
            degree[e.v] += 1
            incident[e.u].append(e)
            if e.v != e.u:
                incident[e.v].append(e)
        self._degree = degree
        self._incident = incident

    # -- simple accessors ---------------------------------------------------

    def degree(self, v: str) -> int:
        return self._degree[v]

    def incident_edges(self, v: str) -> tuple[Edge, ...]:
        return tuple(self._incident[v])

    def edge(self, edge_id: str) -> Edge:
        idx = self.edge_index.get(edge_id)
        if idx is None:
            raise PointNotOnGraph(f"unknown edge id {edge_id!r}")
        return self.edges[idx]

    def vertex_distance(self, u: str, v: str) -> float:
        return float(self.vertex_distances[self.vertex_index[u], self.vertex_index[v]])

    def total_edge_length(self) -> float:
        return float(sum(e.length for e in self.edges))

    def __repr__(self) -> str:
        return f"MetricGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"


def build_graph(
    vertices: Iterable[str],
    edges: Iterable[tuple[str, str, str, float]],
) -> MetricGraph:
    """Validate and assemble a metric graph.

    ``edges`` holds ``(edge_id, u, v, length)`` tuples. Ids must be unique,
    endpoints must name known vertices, lengths must be positive, and the
    result must be connected.
    """
    vs = tuple(str(v) for v in vertices)
    if not vs:
        raise ValidationError("a metric graph needs at least one vertex")
    if len(set(vs)) != len(vs):
        raise ValidationError("duplicate vertex ids")
    vindex = {v: i for i, v in enumerate(vs)}

    built: list[Edge] = []
    seen_ids: set[str] = set()
    for eid, u, v, length in edges:
        eid, u, v = str(eid), str(u), str(v)
        if eid in seen_ids:
            raise ValidationError(f"duplicate edge id {eid!r}")
        seen_ids.add(eid)
        if u not in vindex:
            raise UnknownEndpoint(f"edge {eid!r} references unknown vertex {u!r}")
        if v not in vindex:
            raise UnknownEndpoint(f"edge {eid!r} references unknown vertex {v!r}")
        length = float(length)
        if not np.isfinite(length) or length <= 0.0:
            raise NonPositiveEdgeLength(f"edge {eid!r} has length {length}")
        built.append(Edge(eid, u, v, length))

    n = len(vs)
    # Self-loops never shorten vertex-to-vertex paths; between distinct
    # vertices only the shortest parallel edge matters for the matrix.
    weight = np.zeros((n, n))
    for e in built:
        i, j = vindex[e.u], vindex[e.v]
        if i == j:
            continue
        if weight[i, j] == 0.0 or e.length < weight[i, j]:
            weight[i, j] = e.length
            weight[j, i] = e.length
    dist = shortest_path(csr_matrix(weight), method="D", directed=False)
    if np.isinf(dist).any():
        raise DisconnectedGraph("graph is not connected")
    np.fill_diagonal(dist, 0.0)
    return MetricGraph(vs, tuple(built), dist)


# --------------------------------------------------------------------------
# points


@dataclass(frozen=True, slots=True)
class GraphPoint:
    """A location on a metric graph, in canonical form.

    Either a vertex (``vertex`` set, ``edge`` None) or an interior position
    along an edge measured from the edge's ``u`` endpoint. Offsets 0 and
    full length are stored as vertex locations, which makes equality of
    points decidable by plain comparison.
    """

    vertex: str | None = None
    edge: str | None = None
    offset: float = 0.0

    @property
    def is_vertex(self) -> bool:
        return self.vertex is not None

    def __repr__(self) -> str:
        if self.vertex is not None:
            return f"GraphPoint(vertex={self.vertex!r})"
        return f"GraphPoint(edge={self.edge!r}, offset={self.offset!r})"


def vertex_point(G: MetricGraph, v: str) -> GraphPoint:
    if v not in G.vertex_index:
        raise PointNotOnGraph(f"unknown vertex id {v!r}")
    return GraphPoint(vertex=v)


def edge_point(G: MetricGraph, edge_id: str, offset: float) -> GraphPoint:
    """Canonical point at ``offset`` along an edge (measured from its u end)."""
    e = G.edge(edge_id)
    offset = float(offset)
    if not np.isfinite(offset) or offset < -TOLERANCE or offset > e.length + TOLERANCE:
        raise PointNotOnGraph(
            f"offset {offset} outside [0, {e.length}] on edge {edge_id!r}"
        )
    if offset <= TOLERANCE:
        return GraphPoint(vertex=e.u)
    if offset >= e.length - TOLERANCE:
        return GraphPoint(vertex=e.v)
    return GraphPoint(edge=edge_id, offset=offset)


class PointSet:
    """An ordered, deduplicated collection of canonical graph points."""

    __slots__ = ("points",)

    def __init__(self, points: Iterable[GraphPoint]):
        seen: set[GraphPoint] = set()
        kept: list[GraphPoint] = []
        for p in points:
            if p not in seen:
                seen.add(p)
                kept.append(p)
        self.points = tuple(kept)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[GraphPoint]:
        return iter(self.points)

    def __getitem__(self, i: int) -> GraphPoint:
        return self.points[i]

    def __contains__(self, p: GraphPoint) -> bool:
        return p in set(self.points)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PointSet) and set(self.points) == set(other.points)

    def __hash__(self) -> int:
        return hash(frozenset(self.points))

    def __repr__(self) -> str:
        return f"PointSet({len(self.points)} points)"


def point_set(G: MetricGraph, specs: Iterable[GraphPoint | tuple | str]) -> PointSet:
    """Build a point set from points, ``(edge_id, offset)`` pairs, or vertex ids."""
    pts: list[GraphPoint] = []
    for s in specs:
        if isinstance(s, GraphPoint):
            pts.append(_validate_point(G, s))
        elif isinstance(s, str):
            pts.append(vertex_point(G, s))
        else:
            eid, off = s
            pts.append(edge_point(G, eid, off))
    return PointSet(pts)


def _validate_point(G: MetricGraph, p: GraphPoint) -> GraphPoint:
    if p.vertex is not None:
        return vertex_point(G, p.vertex)
    if p.edge is None:
        raise PointNotOnGraph("point has neither vertex nor edge")
    return edge_point(G, p.edge, p.offset)


# --------------------------------------------------------------------------
# distances between points

# Every point gets two anchor vertices with travel offsets to them: a vertex
# anchors to itself twice at cost 0, an edge point anchors to both endpoints.
# The distance between points on different edges is the best of the four
# anchor-to-anchor routes; on a shared edge the direct within-edge travel
# |s - t| joins the candidates (for a self-loop, the four routes already
# include the complementary arc through the basepoint).


def _fields(G: MetricGraph, pts: Sequence[GraphPoint]):
    k = len(pts)
    eidx = np.full(k, -1, dtype=np.int64)
    a_idx = np.empty(k, dtype=np.int64)
    b_idx = np.empty(k, dtype=np.int64)
    off_a = np.zeros(k)
    off_b = np.zeros(k)
    for i, p in enumerate(pts):
        if p.vertex is not None:
            w = G.vertex_index[p.vertex]
            a_idx[i] = w
            b_idx[i] = w
        else:
            e = G.edge(p.edge)  # raises on unknown edge
            eidx[i] = G.edge_index[p.edge]
            a_idx[i] = G.vertex_index[e.u]
            b_idx[i] = G.vertex_index[e.v]
            off_a[i] = p.offset
            off_b[i] = e.length - p.offset
    return eidx, a_idx, b_idx, off_a, off_b


def _chunk_matrix(G, fa, fb, rows) -> np.ndarray:
    """Distance matrix between rows ``rows`` of field set ``fa`` and all of ``fb``."""
    D = G.vertex_distances
    ea, aa, ba, oa, ob = fa
    eb, ab, bb, pa, pb = fb
    ea, aa, ba = ea[rows], aa[rows], ba[rows]
    oa, ob = oa[rows][:, None], ob[rows][:, None]
    out = oa + D[aa[:, None], ab[None, :]] + pa[None, :]
    np.minimum(out, oa + D[aa[:, None], bb[None, :]] + pb[None, :], out=out)
    np.minimum(out, ob + D[ba[:, None], ab[None, :]] + pa[None, :], out=out)
    np.minimum(out, ob + D[ba[:, None], bb[None, :]] + pb[None, :], out=out)
    shared = (ea[:, None] == eb[None, :]) & (ea[:, None] >= 0)
    if shared.any():
        direct = np.abs(oa - pa[None, :])
        out = np.where(shared, np.minimum(out, direct), out)
    return out


def pairwise_distances(
    G: MetricGraph,
    A: Sequence[GraphPoint] | PointSet,
    B: Sequence[GraphPoint] | PointSet,
) -> np.ndarray:
    """Full |A| x |B| matrix of geodesic distances."""
    pa = list(A)
    pb = list(B)
    if not pa or not pb:
        raise EmptySet("distance against an empty point collection")
    fa = _fields(G, pa)
    fb = _fields(G, pb)
    return _chunk_matrix(G, fa, fb, np.arange(len(pa)))


def point_distance(G: MetricGraph, p: GraphPoint, q: GraphPoint) -> float:
    """Geodesic distance between two points."""
    p = _validate_point(G, p)
    q = _validate_point(G, q)
    D = G.vertex_distances
    vi = G.vertex_index
    if p.vertex is not None and q.vertex is not None:
        return float(D[vi[p.vertex], vi[q.vertex]])

    def anchors(pt: GraphPoint) -> tuple[int, int, float, float]:
        if pt.vertex is not None:
            w = vi[pt.vertex]
            return w, w, 0.0, 0.0
        e = G.edge(pt.edge)
        return vi[e.u], vi[e.v], pt.offset, e.length - pt.offset

    a1, b1, s1, t1 = anchors(p)
    a2, b2, s2, t2 = anchors(q)
    best = min(
        s1 + D[a1, a2] + s2,
        s1 + D[a1, b2] + t2,
        t1 + D[b1, a2] + s2,
        t1 + D[b1, b2] + t2,
    )
    if p.edge is not None and p.edge == q.edge:
        best = min(best, abs(p.offset - q.offset))
    return float(best)


def distance_to_set(G: MetricGraph, p: GraphPoint, A: PointSet) -> float:
    """Distance from a point to the nearest member of a non-empty point set."""
    if len(A) == 0:
        raise EmptySet("distance to an empty point set")
    return float(pairwise_distances(G, [p], A).min())


def set_diameter(G: MetricGraph, A: PointSet) -> float:
    """Largest pairwise distance within a non-empty point set."""
    if len(A) == 0:
        raise EmptySet("diameter of an empty point set")
    return float(pairwise_distances(G, A, A).max())


# --------------------------------------------------------------------------
# continuum diameter

# For two fixed edges the distance between offset-parameterized points is a
# minimum of affine functions with slopes +-1 in each offset. A minimum of
# affine functions is concave, so its maximum over a box (or a triangle,
# after splitting |s - t| into its two affine halves) is attained where two
# of the defining lines cross, or on the boundary. We intersect all pairs
# of lines, keep candidates inside the domain, and evaluate exactly.


def _max_min_affine(lines, inside, evaluate) -> float:
    best = -np.inf
    for (a1, b1, c1), (a2, b2, c2) in itertools.combinations(lines, 2):
        det = a1 * b2 - a2 * b1
        if abs(det) < 1e-15:
            continue
        s = (c1 * b2 - c2 * b1) / det
        t = (a1 * c2 - a2 * c1) / det
        if inside(s, t):
            val = evaluate(s, t)
            if val > best:
                best = val
    return best


def _diameter_pair(G: MetricGraph, e1: Edge, e2: Edge) -> float:
    D = G.vertex_distances
    vi = G.vertex_index
    l1, l2 = e1.length, e2.length
    u1, v1 = vi[e1.u], vi[e1.v]
    u2, v2 = vi[e2.u], vi[e2.v]
    # pieces as (coef_s, coef_t, const): value = cs*s + ct*t + c
    pieces = [
        (1.0, 1.0, float(D[u1, u2])),
        (1.0, -1.0, float(D[u1, v2]) + l2),
        (-1.0, 1.0, float(D[v1, u2]) + l1),
        (-1.0, -1.0, float(D[v1, v2]) + l1 + l2),
    ]

    def evaluate(s: float, t: float) -> float:
        return min(cs * s + ct * t + c for cs, ct, c in pieces)

    lines = [(1.0, 0.0, 0.0), (1.0, 0.0, l1), (0.0, 1.0, 0.0), (0.0, 1.0, l2)]
    for (p, q) in itertools.combinations(pieces, 2):
        a, b, c = p[0] - q[0], p[1] - q[1], q[2] - p[2]
        if a != 0.0 or b != 0.0:
            lines.append((a, b, c))
    eps = 1e-12 * (1.0 + l1 + l2)

    def inside(s: float, t: float) -> bool:
        return -eps <= s <= l1 + eps and -eps <= t <= l2 + eps

    return _max_min_affine(lines, inside, evaluate)


def _diameter_same_edge(G: MetricGraph, e: Edge) -> float:
    # On the triangle 0 <= s <= t <= l the distance is min(t - s, s + h + l - t)
    # with h the vertex distance between the endpoints (0 for a self-loop);
    # the route leaving through u and entering through u again is dominated.
    l = e.length
    h = G.vertex_distance(e.u, e.v)

    def evaluate(s: float, t: float) -> float:
        return min(t - s, s + h + l - t)

    lines = [
        (1.0, 0.0, 0.0),
        (0.0, 1.0, l),
        (1.0, -1.0, 0.0),  # the s = t boundary of the triangle
        (-2.0, 2.0, h + l),  # crossing of the two pieces
    ]
    eps = 1e-12 * (1.0 + l)

    def inside(s: float, t: float) -> bool:
        return -eps <= s and t <= l + eps and s <= t + eps

    return _max_min_affine(lines, inside, evaluate)


def graph_diameter(G: MetricGraph) -> float:
    """Supremum of distances over the whole continuum of the graph, exactly."""
    if not G.edges:
        return 0.0
    best = float(G.vertex_distances.max())
    for i, e1 in enumerate(G.edges):
        best = max(best, _diameter_same_edge(G, e1))
        for e2 in G.edges[i + 1 :]:
            best = max(best, _diameter_pair(G, e1, e2))
    return best


# --------------------------------------------------------------------------
# boundary and loop structure


def boundary(G: MetricGraph) -> tuple[str, ...]:
    """Vertices of degree one, in vertex order. Self-loops count twice."""
    return tuple(v for v in G.vertices if G.degree(v) == 1)


def smallest_nonterminal_edge(G: MetricGraph) -> float | None:
    """Shortest edge length among edges whose endpoints both have degree > 1.

    Returns None when no edge qualifies. Whenever the graph has a loop,
    every loop edge qualifies, so the value is defined.
    """
    qualifying = [
        e.length for e in G.edges if G.degree(e.u) > 1 and G.degree(e.v) > 1
    ]
    if not qualifying:
        return None
    return float(min(qualifying))


def circle_circumference(G: MetricGraph) -> float:
    """Circumference of a circle graph: one vertex carrying one self-loop."""
    if len(G.vertices) == 1 and len(G.edges) == 1:
        e = G.edges[0]
        if e.u == e.v:
            return e.length
    raise NotACircle("graph is not a single-vertex self-loop")


@dataclass(frozen=True)
class SimpleLoop:
    """A closed path that revisits no vertex except its basepoint.

    ``steps`` is the canonical traversal: pairs ``(edge_id, direction)``
    with direction +1 for u -> v travel. Canonical means lexicographically
    smallest among all rotations of both traversal directions, so equal
    loops compare equal.
    """

    steps: tuple[tuple[str, int], ...]
    length: float

    @staticmethod
    def make(steps: Sequence[tuple[str, int]], length: float) -> "SimpleLoop":
        variants = []
        fwd = tuple(steps)
        rev = tuple((eid, -d) for eid, d in reversed(fwd))
        for seq in (fwd, rev):
            for r in range(len(seq)):
                variants.append(seq[r:] + seq[:r])
        return SimpleLoop(min(variants), float(length))


def enumerate_simple_loops(G: MetricGraph, max_loops: int = 10000) -> tuple[SimpleLoop, ...]:
    """All simple loops: self-loop edges, parallel-edge pairs, and longer cycles.

    Parallel edges are distinct cycle constituents, so a theta graph on two
    vertices with three parallel edges yields three loops. Raises
    LoopCountGuardExceeded when more than ``max_loops`` loops would be built.
    """
    loops: list[SimpleLoop] = []

    def push(steps, length):
        loops.append(SimpleLoop.make(steps, length))
        if len(loops) > max_loops:
            raise LoopCountGuardExceeded(
                f"more than {max_loops} simple loops; raise max_loops to continue"
            )

    by_pair: dict[tuple[str, str], list[Edge]] = {}
    for e in G.edges:
        if e.u == e.v:
            push([(e.id, 1)], e.length)
        else:
            key = (min(e.u, e.v), max(e.u, e.v))
            by_pair.setdefault(key, []).append(e)

    # two parallel edges bound a loop
    for (u, v), group in sorted(by_pair.items()):
        for e1, e2 in itertools.combinations(group, 2):
            d1 = 1 if e1.u == u else -1
            d2 = -1 if e2.u == u else 1  # traverse e2 back from v to u
            push([(e1.id, d1), (e2.id, d2)], e1.length + e2.length)

    # vertex-simple cycles on >= 3 vertices over the simple skeleton,
    # expanded over every choice of parallel edge per hop
    idx = {v: i for i, v in enumerate(G.vertices)}
    neighbors: dict[int, set[int]] = {i: set() for i in range(len(G.vertices))}
    for (u, v) in by_pair:
        neighbors[idx[u]].add(idx[v])
        neighbors[idx[v]].add(idx[u])

    def expand_cycle(cycle: list[int]) -> None:
        hops = []
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            ua, ub = G.vertices[a], G.vertices[b]
            key = (min(ua, ub), max(ua, ub))
            hops.append([(e, 1 if e.u == ua else -1) for e in by_pair[key]])
        for combo in itertools.product(*hops):
            push(
                [(e.id, d) for e, d in combo],
                sum(e.length for e, d in combo),
            )

    n = len(G.vertices)
    for start in range(n):
        stack: list[tuple[list[int], set[int]]] = [([start], {start})]
        while stack:
            path, used = stack.pop()
            last = path[-1]
            for nxt in sorted(neighbors[last]):
                if nxt == start and len(path) >= 3:
                    if path[1] < path[-1]:  # one orientation per cycle
                        expand_cycle(path)
                elif nxt > start and nxt not in used:
                    stack.append((path + [nxt], used | {nxt}))

    loops.sort(key=lambda lp: (lp.length, lp.steps))
    return tuple(loops)


# --------------------------------------------------------------------------
# regions: unions of open edge intervals plus marked vertices


@dataclass(frozen=True)
class EdgeIntervalSet:
    """A region of the graph: per edge a tuple of disjoint open intervals,
    plus the set of vertices the region contains.

    Whether an endpoint of an interval belongs to the region is recorded
    only through ``vertices``; intervals themselves are open. Operations
    that need the closure of the region treat interval endpoints as
    included.
    """

    intervals: Mapping[str, tuple[tuple[float, float], ...]]
    vertices: frozenset[str]

    @property
    def is_empty(self) -> bool:
        return not self.vertices and all(not iv for iv in self.intervals.values())

    def issubset(self, other: "EdgeIntervalSet") -> bool:
        if not self.vertices <= other.vertices:
            return False
        for eid, ivs in self.intervals.items():
            cover = other.intervals.get(eid, ())
            for lo, hi in ivs:
                if not any(clo <= lo and hi <= chi for clo, chi in cover):
                    return False
        return True

    def total_length(self) -> float:
        return float(
            sum(hi - lo for ivs in self.intervals.values() for lo, hi in ivs)
        )


def region(
    G: MetricGraph,
    intervals: Mapping[str, Iterable[tuple[float, float]]],
    vertices: Iterable[str] = (),
) -> EdgeIntervalSet:
    """Validate and normalize a region description."""
    norm: dict[str, tuple[tuple[float, float], ...]] = {}
    for eid, ivs in intervals.items():
        e = G.edge(eid)
        cleaned = sorted((float(lo), float(hi)) for lo, hi in ivs)
        prev_hi = -np.inf
        kept = []
        for lo, hi in cleaned:
            if lo < -TOLERANCE or hi > e.length + TOLERANCE or hi <= lo:
                raise ValidationError(
                    f"interval ({lo}, {hi}) invalid on edge {eid!r} of length {e.length}"
                )
            lo, hi = max(lo, 0.0), min(hi, e.length)
            if lo < prev_hi:
                raise ValidationError(f"overlapping intervals on edge {eid!r}")
            prev_hi = hi
            kept.append((lo, hi))
        if kept:
            norm[eid] = tuple(kept)
    vset = frozenset(str(v) for v in vertices)
    for v in vset:
        if v not in G.vertex_index:
            raise ValidationError(f"region references unknown vertex {v!r}")
    return EdgeIntervalSet(norm, vset)


def whole_graph_region(G: MetricGraph) -> EdgeIntervalSet:
    return EdgeIntervalSet(
        {e.id: ((0.0, e.length),) for e in G.edges},
        frozenset(G.vertices),
    )


def _merge_open(raw: list[tuple[float, float]]) -> tuple[tuple[float, float], ...]:
    """Union of open intervals; merge only on strict overlap.

    Two open intervals that merely touch at a point leave that point
    uncovered, so they stay separate fragments.
    """
    raw = sorted((lo, hi) for lo, hi in raw if hi > lo)
    if not raw:
        return ()
    merged = [list(raw[0])]
    for lo, hi in raw[1:]:
        if lo < merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    return tuple((lo, hi) for lo, hi in merged)


def thickening(G: MetricGraph, A: PointSet, r: float) -> EdgeIntervalSet:
    """Union of open balls of radius ``r`` around the members of ``A``.

    Computed in closed form: on each edge the ball around a source is the
    union of a direct within-edge interval (when the source sits on the
    edge) and two intervals growing from the endpoints with the leftover
    radius after reaching them.
    """
    r = float(r)
    if r <= 0.0:
        raise NonPositiveRadius(f"radius must be positive, got {r}")
    if len(A) == 0:
        raise EmptySet("thickening of an empty point set")
    all_vertices = [GraphPoint(vertex=v) for v in G.vertices]
    vdist = pairwise_distances(G, all_vertices, A).min(axis=1)
    vertices = frozenset(
        v for v, d in zip(G.vertices, vdist) if d < r
    )
    on_edge: dict[str, list[float]] = {}
    for p in A:
        if p.edge is not None:
            on_edge.setdefault(p.edge, []).append(p.offset)
    intervals: dict[str, tuple[tuple[float, float], ...]] = {}
    for e in G.edges:
        raw: list[tuple[float, float]] = []
        du = float(vdist[G.vertex_index[e.u]])
        dv = float(vdist[G.vertex_index[e.v]])
        if r - du > 0.0:
            raw.append((0.0, min(e.length, r - du)))
        if r - dv > 0.0:
            raw.append((max(0.0, e.length - (r - dv)), e.length))
        for t in on_edge.get(e.id, ()):
            raw.append((max(0.0, t - r), min(e.length, t + r)))
        merged = _merge_open(raw)
        if merged:
            intervals[e.id] = merged
    return EdgeIntervalSet(intervals, vertices)


def region_is_connected(G: MetricGraph, W: EdgeIntervalSet) -> bool:
    """True iff the region is path-connected as a subspace of the graph.

    Fragments are the open intervals and the included vertices; an interval
    joins a vertex exactly when it reaches offset 0 or the full edge length
    and that endpoint vertex belongs to the region. The empty region counts
    as connected.
    """
    parent: dict[object, object] = {}

    def find(x):
        while parent[x] is not x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx is not ry:
            parent[rx] = ry

    for v in W.vertices:
        parent[("v", v)] = ("v", v)
    for eid, ivs in W.intervals.items():
        e = G.edge(eid)
        for k, (lo, hi) in enumerate(ivs):
            node = ("i", eid, k)
            parent[node] = node
            if lo == 0.0 and e.u in W.vertices:
                union(node, ("v", e.u))
            if hi == e.length and e.v in W.vertices:
                union(node, ("v", e.v))
    if not parent:
        return True
    roots = {find(x) for x in parent}
    return len(roots) == 1
