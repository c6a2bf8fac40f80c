"""Certified GH lower bounds, exact values, and the extremal instances.

Run: python3 demos/04_certified_bounds.py
"""

import math

import ghgraph as gg

PI = math.pi


def show(cert):
    print(f"  [{cert.theorem}] {cert.kind}: value={cert.value:.9f}", end="")
    if cert.upper_bound is not None:
        print(f"  (d_H upper bound {cert.upper_bound:.9f})")
    else:
        print()
    for h in cert.hypotheses:
        mark = "ok" if h.satisfied else "FAILED"
        print(f"      {h.description}: {h.left:.6f} {h.relation} {h.right:.6f} [{mark}]")


# --- trees: when the sample clears the boundary, GH equals Hausdorff -------
S = gg.segment_graph(0.0, 2.0)
ends = gg.point_set(S, ["u", "v"])
print("segment [0,2] vs its endpoints:")
show(gg.tree_equality(S, ends))

# The interval corollary computes the same value in closed form.
print("closed form:", gg.interval_gh_exact(0.0, 2.0, ends, S))

# --- circles: d_H is exact up to the pi/3 cap ------------------------------
C = gg.circle_graph()
X3 = gg.point_set(C, [("loop", 2 * PI * i / 3) for i in range(3)])
print("\ncircle vs 3 equally spaced points:")
show(gg.circle_bound(C, X3))

# The six-point instance shows the cap is sharp: d_H = pi/3 + eps strictly
# exceeds the true GH distance pi/3, certified on both sides.
X6, R = gg.circle_six_point(0.1)
lower = gg.circle_bound(C, X6).value
upper = gg.arc_correspondence_distortion(R, X6, C) / 2
print("\nsix-point instance (eps = 0.1):")
print("  d_H =", gg.hausdorff_graph_to_set(C, X6))
print("  certified lower bound =", lower)
print("  correspondence upper bound =", upper)
print("  => gh = pi/3 exactly, strictly below d_H")

# --- the star collapse: GH/Hausdorff ratio can be arbitrarily small --------
print("\nstar counterexample:")
for n in (4, 16):
    T, X, Xc = gg.star_counterexample(n)
    h = gg.hausdorff_graph_to_region(T, X)
    h_iso = gg.hausdorff_graph_to_region(T, Xc)
    print(f"  n={n}: d_H(T, X) = {h:.4f} but an isometric copy sits {h_iso:.4f} away")

# --- general graphs and the 1/12 constant ----------------------------------
G = gg.theta_graph(3.0, 4.0, 5.0)
net = gg.epsilon_net(G, 0.1)
print("\ntheta graph vs a 0.1-net:")
show(gg.graph_bound(G, net))

# best_bound dispatches everything applicable and sorts by value.
print("\nbest_bound on the circle pair (3 points vs 0.25-net):")
Y = gg.epsilon_net(C, 0.25)
for cert in gg.best_bound(C, X3, Y):
    show(cert)

print("\nthe same reports are available from the command line, e.g.")
print("  ghgraph bound --graph g.json --subset x.json")
print("  ghgraph construct circle6 --epsilon 0.1 --out six")
print("  ghgraph experiment ratio --graph g.json --samples 20 --seed 1")
