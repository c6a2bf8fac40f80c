"""Hausdorff distances: finite sets, whole-graph suprema, continuum regions.

Run: python3 demos/02_hausdorff.py
"""

import math
import time
import random

import ghgraph as gg

C = gg.circle_graph()  # circumference 2*pi

# Between two finite subsets the distance is a max-min over point pairs.
X = gg.point_set(C, [("loop", 2 * math.pi * i / 3) for i in range(3)])
Y = gg.point_set(C, [("loop", 0.3), ("loop", 3.0)])
print("directed d(X -> Y):", gg.directed_hausdorff_sets(C, X, Y))
print("directed d(Y -> X):", gg.directed_hausdorff_sets(C, Y, X))
print("symmetric:", gg.hausdorff_sets(C, X, Y))

# Against the whole graph the supremum is computed exactly from the
# piecewise-linear distance envelope on every edge, never by sampling.
print("\nd_H(circle, 3 spaced points) =", gg.hausdorff_graph_to_set(C, X))
print("expected pi/3 =", math.pi / 3)

# Regions (continuum subsets) get exact treatment too.
half = gg.region(C, {"loop": [(0.0, math.pi)]})
print("\nd_H(circle, closed half-circle) =", gg.hausdorff_graph_to_region(C, half))
print("expected pi/2 =", math.pi / 2)

# The directed distance from the boundary shows up as a theorem hypothesis.
S = gg.segment_graph(0.0, 2.0)
Xs = gg.point_set(S, [("seg", 0.5)])
print("\nsegment [0,2], X = {0.5}:")
print("  d_H(graph, X) =", gg.hausdorff_graph_to_set(S, Xs))
print("  d(boundary -> X) =", gg.directed_hausdorff_boundary(S, Xs))

# The set-to-set scan is a blocked matrix computation; two 5000-point sets
# on a 100-edge ring finish in a couple of seconds.
rng = random.Random(0)
verts = [f"v{i}" for i in range(100)]
edges = [
    (f"e{i}", verts[i], verts[(i + 1) % 100], rng.uniform(0.5, 1.5)) for i in range(100)
]
ring = gg.build_graph(verts, edges)
ids = [e.id for e in ring.edges]
lens = {e.id: e.length for e in ring.edges}


def sample(n):
    return gg.point_set(
        ring, [(i, rng.random() * lens[i]) for i in (rng.choice(ids) for _ in range(n))]
    )


A, B = sample(5000), sample(5000)
t0 = time.perf_counter()
v = gg.hausdorff_sets(ring, A, B)
print(f"\n5000 x 5000 points on 100 edges: d_H = {v:.6f}",
      f"({time.perf_counter() - t0:.2f}s)")
