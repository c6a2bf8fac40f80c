"""Command line interface: load fixtures, compute, emit tagged JSON reports.

File formats (all JSON):
  graph          {"vertices": ["v0", ...],
                  "edges": [{"id": "e0", "u": "v0", "v": "v1", "length": 1.5}, ...]}
  point set      [{"vertex": "v0"} | {"edge": "e0", "offset": 0.3}, ...]
  matrix         {"n": 3, "d": [row-major reals]}
  correspondence [{"arc": [lo, hi], "point": 2}, ...]
  region         {"intervals": {"e0": [[lo, hi], ...]}, "vertices": ["v0", ...]}

Wherever a number is expected, the tokens "pi", "2pi", "pi/3", and more
generally "<k>pi/<m>" are accepted and expanded exactly at parse time, so
fixtures can state pi-valued lengths without embedding rounded decimals.
All emitted numbers carry 12 significant digits and are tagged with the
name of the operation that produced them. Reports go to stdout; --out
writes the same bytes to a file as well.

Exit codes: 0 success, 2 parse failure, 3 validation failure, 4 work-guard
exceeded, 5 construction verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import re
import sys
from typing import Any, Sequence

import numpy as np

from .bounds import BoundCertificate, best_bound
from .constructions import (
    arc_correspondence_distortion,
    circle_graph,
    circle_six_point,
    epsilon_net,
    star_counterexample,
)
from .errors import (
    ConstructionVerificationFailed,
    GhGraphError,
    GuardExceeded,
    ParseError,
    ValidationError,
)
from .graph import (
    EdgeIntervalSet,
    MetricGraph,
    PointSet,
    build_graph,
    point_set,
    smallest_nonterminal_edge,
)
from .hausdorff import (
    directed_hausdorff_boundary,
    directed_hausdorff_sets,
    hausdorff_graph_to_region,
    hausdorff_graph_to_set,
    hausdorff_sets,
)
from .oracle import FiniteMetricSpace, gh_exact, restrict_metric

__all__ = ["main"]

_PI_TOKEN = re.compile(r"^(\d*)pi(?:/(\d+))?$")


def parse_real(value: Any, what: str = "number") -> float:
    """Accept JSON numbers, numeric strings, and pi tokens like "2pi", "pi/3"."""
    if isinstance(value, bool):
        raise ParseError(f"{what}: expected a number, got {value!r}")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        text = value.strip()
        m = _PI_TOKEN.match(text)
        if m:
            coef = float(m.group(1)) if m.group(1) else 1.0
            div = float(m.group(2)) if m.group(2) else 1.0
            if div == 0.0:
                raise ParseError(f"{what}: zero divisor in {value!r}")
            return coef * math.pi / div
        try:
            return float(text)
        except ValueError:
            raise ParseError(f"{what}: cannot parse {value!r}") from None
    raise ParseError(f"{what}: expected a number, got {type(value).__name__}")


def _sig12(x: float) -> float:
    # round to 12 significant digits; the shortest repr of the result is
    # exactly the 12-digit decimal, keeping emitted files byte-stable
    return float(f"{float(x):.12g}")


def _tag(op: str, value: float) -> dict:
    return {"op": op, "value": _sig12(value)}


# --------------------------------------------------------------------------
# loading and dumping fixtures


def _load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from None


def load_graph(path: str) -> MetricGraph:
    doc = _load_json(path)
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise ParseError(f"{path}: graph document needs 'vertices' and 'edges'")
    edges = []
    for e in doc["edges"]:
        if not isinstance(e, dict) or not {"id", "u", "v", "length"} <= set(e):
            raise ParseError(f"{path}: edge entries need id, u, v, length")
        edges.append(
            (str(e["id"]), str(e["u"]), str(e["v"]), parse_real(e["length"], "edge length"))
        )
    return build_graph([str(v) for v in doc["vertices"]], edges)


def load_subset(path: str, G: MetricGraph) -> PointSet:
    doc = _load_json(path)
    if not isinstance(doc, list):
        raise ParseError(f"{path}: point set document must be a list")
    specs: list = []
    for item in doc:
        if not isinstance(item, dict):
            raise ParseError(f"{path}: point entries must be objects")
        if "vertex" in item:
            specs.append(str(item["vertex"]))
        elif "edge" in item and "offset" in item:
            specs.append((str(item["edge"]), parse_real(item["offset"], "offset")))
        else:
            raise ParseError(f"{path}: point entry needs 'vertex' or 'edge'+'offset'")
    return point_set(G, specs)


def load_matrix(path: str) -> FiniteMetricSpace:
    doc = _load_json(path)
    if not isinstance(doc, dict) or "n" not in doc or "d" not in doc:
        raise ParseError(f"{path}: matrix document needs 'n' and 'd'")
    n = int(doc["n"])
    flat = [parse_real(v, "matrix entry") for v in doc["d"]]
    if n <= 0 or len(flat) != n * n:
        raise ParseError(f"{path}: 'd' must hold n*n = {n * n} entries")
    return FiniteMetricSpace(np.asarray(flat, dtype=float).reshape(n, n))


def _graph_doc(G: MetricGraph, length_tokens: dict[str, str] | None = None) -> dict:
    tokens = length_tokens or {}
    return {
        "vertices": list(G.vertices),
        "edges": [
            {
                "id": e.id,
                "u": e.u,
                "v": e.v,
                "length": tokens.get(e.id, _sig12(e.length)),
            }
            for e in G.edges
        ],
    }


def _subset_doc(X: PointSet) -> list:
    out = []
    for p in X:
        if p.vertex is not None:
            out.append({"vertex": p.vertex})
        else:
            out.append({"edge": p.edge, "offset": _sig12(p.offset)})
    return out


def _region_doc(W: EdgeIntervalSet) -> dict:
    return {
        "intervals": {
            eid: [[_sig12(lo), _sig12(hi)] for lo, hi in ivs]
            for eid, ivs in sorted(W.intervals.items())
        },
        "vertices": sorted(W.vertices),
    }


def _write_json(path: str, doc: Any) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def _certificate_doc(cert: BoundCertificate) -> dict:
    op = {
        "tree-equality": "tree_equality",
        "tree-pair": "tree_pair_bound",
        "circle": "circle_bound",
        "circle-pair": "circle_pair_bound",
        "graph": "graph_bound",
        "graph-pair": "graph_pair_bound",
        "diameter": "diameter_bound",
        "interval-exact": "interval_gh_exact",
    }.get(cert.theorem, cert.theorem)
    doc = {
        "theorem": cert.theorem,
        "kind": cert.kind,
        "value": _tag(op, cert.value),
        "hypotheses": [
            {
                "description": h.description,
                "left": _tag(op, h.left),
                "relation": h.relation,
                "right": _tag(op, h.right),
                "satisfied": h.satisfied,
            }
            for h in cert.hypotheses
        ],
    }
    if cert.upper_bound is not None:
        doc["upper_bound"] = _tag(op, cert.upper_bound)
    return doc


# --------------------------------------------------------------------------
# subcommands


def _cmd_hausdorff(args: argparse.Namespace) -> dict:
    G = load_graph(args.graph)
    X = load_subset(args.subset, G)
    report: dict = {
        "command": "hausdorff",
        "graph": args.graph,
        "subset": args.subset,
        "graph_to_set": _tag("hausdorff_graph_to_set", hausdorff_graph_to_set(G, X)),
        "boundary_to_set": _tag(
            "directed_hausdorff_boundary", directed_hausdorff_boundary(G, X)
        ),
    }
    if args.subset2:
        Y = load_subset(args.subset2, G)
        report["subset2"] = args.subset2
        report["directed_xy"] = _tag(
            "directed_hausdorff_sets", directed_hausdorff_sets(G, X, Y)
        )
        report["directed_yx"] = _tag(
            "directed_hausdorff_sets", directed_hausdorff_sets(G, Y, X)
        )
        report["symmetric"] = _tag("hausdorff_sets", hausdorff_sets(G, X, Y))
    return report


def _cmd_bound(args: argparse.Namespace) -> dict:
    G = load_graph(args.graph)
    X = load_subset(args.subset, G)
    Y = load_subset(args.subset2, G) if args.subset2 else None
    certs = best_bound(G, X, Y)
    return {
        "command": "bound",
        "graph": args.graph,
        "subset": args.subset,
        "subset2": args.subset2,
        "certificates": [_certificate_doc(c) for c in certs],
    }


def _cmd_oracle(args: argparse.Namespace) -> dict:
    if args.matrix:
        if not args.matrix2:
            raise ParseError("oracle needs --matrix2 alongside --matrix")
        X = load_matrix(args.matrix)
        Y = load_matrix(args.matrix2)
        source = {"matrix": args.matrix, "matrix2": args.matrix2}
    else:
        if not (args.graph and args.subset and args.subset2):
            raise ParseError(
                "oracle needs either --matrix/--matrix2 or --graph/--subset/--subset2"
            )
        G = load_graph(args.graph)
        X = restrict_metric(G, load_subset(args.subset, G))
        Y = restrict_metric(G, load_subset(args.subset2, G))
        source = {
            "graph": args.graph,
            "subset": args.subset,
            "subset2": args.subset2,
        }
    value, witness = gh_exact(X, Y, guard=args.guard)
    report = {"command": "oracle", **source}
    report["value"] = _tag("gh_exact", value)
    report["distortion"] = _tag("distortion", 2.0 * value)
    report["witness"] = [[i, j] for i, j in witness]
    return report


def _cmd_construct(args: argparse.Namespace) -> dict:
    prefix = args.out or args.name
    written: dict[str, str] = {}
    report: dict = {"command": "construct", "name": args.name}

    if args.name == "star":
        if args.n is None:
            raise ParseError("construct star needs --n")
        T, X, Xc = star_counterexample(args.n)
        written["graph"] = f"{prefix}-graph.json"
        written["x"] = f"{prefix}-x.json"
        written["x_centered"] = f"{prefix}-x-centered.json"
        _write_json(written["graph"], _graph_doc(T))
        _write_json(written["x"], _region_doc(X))
        _write_json(written["x_centered"], _region_doc(Xc))
        report["verification"] = {
            "d_H_T_X": _tag(
                "hausdorff_graph_to_region", hausdorff_graph_to_region(T, X)
            ),
            "d_H_T_X_centered": _tag(
                "hausdorff_graph_to_region", hausdorff_graph_to_region(T, Xc)
            ),
        }
    elif args.name == "circle6":
        if args.epsilon is None:
            raise ParseError("construct circle6 needs --epsilon")
        eps = parse_real(args.epsilon, "--epsilon")
        X, R = circle_six_point(eps)
        G = circle_graph()
        written["graph"] = f"{prefix}-graph.json"
        written["points"] = f"{prefix}-points.json"
        written["correspondence"] = f"{prefix}-correspondence.json"
        _write_json(written["graph"], _graph_doc(G, {"loop": "2pi"}))
        _write_json(written["points"], _subset_doc(X))
        _write_json(
            written["correspondence"],
            [
                {"arc": [_sig12(lo), _sig12(hi)], "point": idx}
                for (lo, hi), idx in R
            ],
        )
        report["verification"] = {
            "d_H": _tag("hausdorff_graph_to_set", hausdorff_graph_to_set(G, X)),
            "distortion": _tag(
                "arc_correspondence_distortion",
                arc_correspondence_distortion(R, X, G),
            ),
        }
    elif args.name == "net":
        if not args.graph:
            raise ParseError("construct net needs --graph")
        if args.epsilon is None:
            raise ParseError("construct net needs --epsilon")
        eps = parse_real(args.epsilon, "--epsilon")
        G = load_graph(args.graph)
        net = epsilon_net(G, eps)
        written["subset"] = f"{prefix}-net.json"
        _write_json(written["subset"], _subset_doc(net))
        report["verification"] = {
            "d_H": _tag("hausdorff_graph_to_set", hausdorff_graph_to_set(G, net)),
            "epsilon": _tag("epsilon_net", eps),
            "points": len(net),
        }
    else:  # pragma: no cover - argparse restricts choices
        raise ParseError(f"unknown construction {args.name!r}")

    report["files"] = written
    return report


def _random_subset(G: MetricGraph, rng: random.Random, npts: int) -> PointSet:
    edges = list(G.edges)
    weights = [e.length for e in edges]
    specs = []
    for _ in range(npts):
        e = rng.choices(edges, weights=weights)[0]
        specs.append((e.id, rng.random() * e.length))
    return point_set(G, specs)


def _cmd_experiment(args: argparse.Namespace) -> dict:
    if args.kind != "ratio":
        raise ParseError(f"unknown experiment {args.kind!r}")
    G = load_graph(args.graph)
    rng = random.Random(args.seed)
    total_len = sum(e.length for e in G.edges)
    npts = max(1, round(args.density * total_len))
    e_val = smallest_nonterminal_edge(G)

    rows = []
    for trial in range(args.samples):
        X = _random_subset(G, rng, npts)
        Y = _random_subset(G, rng, npts)
        row: dict = {
            "trial": trial,
            "size_x": len(X),
            "size_y": len(Y),
            "d_H": _tag("hausdorff_sets", hausdorff_sets(G, X, Y)),
            "certificates": [
                {
                    "theorem": c.theorem,
                    "kind": c.kind,
                    "value": _tag("best_bound", c.value),
                }
                for c in best_bound(G, X, Y)
            ],
        }
        if len(X) <= 8 and len(Y) <= 8:
            try:
                value, _ = gh_exact(
                    restrict_metric(G, X), restrict_metric(G, Y), guard=args.guard
                )
                row["oracle"] = _tag("gh_exact", value)
            except GuardExceeded:
                row["oracle"] = {"op": "gh_exact", "error": "guard-exceeded"}
        else:
            row["oracle"] = {"op": "gh_exact", "error": "skipped-too-large"}
        rows.append(row)

    report: dict = {
        "command": "experiment",
        "kind": "ratio",
        "graph": args.graph,
        "seed": args.seed,
        "samples": args.samples,
        "density": args.density,
        "points_per_subset": npts,
        "rows": rows,
    }
    if e_val is not None:
        report["e"] = _tag("smallest_nonterminal_edge", e_val)
        levels = {"e_over_12": e_val / 12.0, "e_over_8": e_val / 8.0}
        summary = {}
        for label, level in levels.items():
            window = 0.25 * level
            hits = [
                r["oracle"]["value"]
                for r in rows
                if "value" in r["oracle"]
                and abs(r["d_H"]["value"] - level) <= window
            ]
            summary[label] = {
                "level": _sig12(level),
                "window": _sig12(window),
                "trials": len(hits),
                "min_gh": _sig12(min(hits)) if hits else None,
            }
        report["levels"] = summary
    return report


# --------------------------------------------------------------------------
# entry point


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="ghgraph",
        description="Hausdorff distances and certified GH bounds on metric graphs",
    )
    sub = top.add_subparsers(dest="cmd", required=True)

    def common(p: argparse.ArgumentParser, *names: str) -> None:
        if "graph" in names:
            p.add_argument("--graph", help="graph JSON file")
        if "subset" in names:
            p.add_argument("--subset", help="point set JSON file")
        if "subset2" in names:
            p.add_argument("--subset2", help="second point set JSON file")
        p.add_argument("--out", help="also write the report (or files) here")

    p = sub.add_parser("hausdorff", help="Hausdorff distances for subsets")
    common(p, "graph", "subset", "subset2")
    p.set_defaults(fn=_cmd_hausdorff)

    p = sub.add_parser("bound", help="certified GH bounds")
    common(p, "graph", "subset", "subset2")
    p.set_defaults(fn=_cmd_bound)

    p = sub.add_parser("oracle", help="exact GH distance for small spaces")
    common(p, "graph", "subset", "subset2")
    p.add_argument("--matrix", help="distance matrix JSON file")
    p.add_argument("--matrix2", help="second distance matrix JSON file")
    p.add_argument("--guard", type=int, default=100_000_000, help="work guard")
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("construct", help="generate certified instances")
    p.add_argument("name", choices=["star", "circle6", "net"])
    p.add_argument("--graph", help="graph JSON file (net)")
    p.add_argument("--n", type=int, help="ray count (star)")
    p.add_argument("--epsilon", help="epsilon value, pi tokens accepted")
    p.add_argument("--out", help="output path prefix")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("experiment", help="observational ratio experiments")
    p.add_argument("kind", choices=["ratio"])
    p.add_argument("--graph", required=True, help="graph JSON file")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--density", type=float, default=1.0, help="points per unit length")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--guard", type=int, default=2_000_000)
    p.add_argument("--out", help="also write the report here")
    p.set_defaults(fn=_cmd_experiment)

    return top


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except ConstructionVerificationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except GhGraphError as exc:  # any remaining library error counts as validation
        print(f"error: {exc}", file=sys.stderr)
        return 3
    text = json.dumps(report, indent=2) + "\n"
    sys.stdout.write(text)
    if args.cmd != "construct" and getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0
