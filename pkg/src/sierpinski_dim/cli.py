"""Command-line front end.

Graphs are given either as a family name (``path:5``, ``cycle:5``,
``star:3``, ``fk:4``, ``complete:4``, ``k1:1``, optionally prefixed with
``family:``) or as a path to a graph text file. Vertex-function values are
1-based on the command line and in all JSON output.

Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import families
from .convexity import verify_layer_convexity
from .errors import BudgetExceeded, FunctionSpaceTooLarge, GraphError
from .graph import Graph, format_graph_text, is_path_graph, parse_graph_text, to_dot
from .metric import SearchLimits, metric_dimension
from .product import (
    constant_function,
    cycle_triangle_function,
    path_mod4_function,
    path_tree_witness_function,
    sierpinski_product,
)
from .search import EnumerationBudget, cycle_order, is_cycle_graph, path_order, sierpinski_dims
from .verify import run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

_FAMILIES = {
    "path": families.path_graph,
    "cycle": families.cycle_graph,
    "star": families.star_graph,
    "fk": families.fk_graph,
    "complete": families.complete_graph,
    "k1": lambda _n=1: families.path_graph(1),
}


def load_graph(spec: str) -> Graph:
    name = spec[len("family:"):] if spec.startswith("family:") else spec
    head, _, arg = name.partition(":")
    if head in _FAMILIES and not Path(spec).exists():
        try:
            return _FAMILIES[head](int(arg)) if arg else _FAMILIES[head]()
        except (TypeError, ValueError) as exc:
            raise GraphError(f"bad family spec {spec!r}: {exc}") from None
    path = Path(spec)
    if not path.exists():
        raise GraphError(f"{spec!r} is neither a family name nor a graph file")
    return parse_graph_text(path.read_text())


def _along(order, values):
    f = [0] * len(order)
    for pos, v in enumerate(order):
        f[v] = values[pos]
    return tuple(f)


def parse_function(spec: str, G: Graph, H: Graph) -> tuple[int, ...]:
    """Explicit 1-based vector or a named generator."""
    if spec == "cycle-triangle":
        if not is_cycle_graph(G):
            raise GraphError("cycle-triangle needs a cycle as first factor")
        return _along(cycle_order(G), cycle_triangle_function(G.n))
    if spec == "path-tree-witness":
        if not is_path_graph(G) or G.n < 2:
            raise GraphError("path-tree-witness needs a path on >= 2 vertices as first factor")
        f = path_tree_witness_function(G.n, H)
        return _along(path_order(G), f)
    if spec.startswith("constant:"):
        return constant_function(G, int(spec.split(":", 1)[1]) - 1, H)
    if spec.startswith("mod4:"):
        a, b = (int(x) - 1 for x in spec.split(":", 1)[1].split(","))
        if not is_path_graph(G):
            raise GraphError("mod4 needs a path as first factor")
        return _along(path_order(G), path_mod4_function(G.n, a, b))
    try:
        return tuple(int(x) - 1 for x in spec.split(","))
    except ValueError:
        raise GraphError(f"cannot parse function spec {spec!r}") from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def cmd_product(args) -> int:
    G, H = load_graph(args.G), load_graph(args.H)
    P = sierpinski_product(G, H, parse_function(args.f, G, H))
    if args.format == "dot":
        print(P.to_dot(), end="")
    elif args.format == "text":
        print(format_graph_text(P.graph), end="")
    elif args.format == "table":
        print(f"f (1-based): {[h + 1 for h in P.f]}")
        print(f"vertices: {P.graph.n}  edges: {P.graph.m}  connecting edges: {len(P.connecting_edges)}")
    else:
        print(_dump(P.to_dict()))
    return EXIT_OK


def cmd_dim(args) -> int:
    G = load_graph(args.graph)
    rep = metric_dimension(G, args.method, SearchLimits(args.max_subsets, args.max_ms))
    if args.format == "table":
        print(f"dim = {rep.value}  witness = {list(rep.witness or [])}  method = {rep.method}")
    elif args.format == "dot":
        print(to_dot(G, labels={v: f"{v}*" for v in rep.witness or ()}), end="")
    else:
        print(_dump(rep.to_dict(timing=not args.no_timing)))
    return EXIT_OK


def cmd_sdim(args) -> int:
    G, H = load_graph(args.G), load_graph(args.H)
    method = "formula" if args.formula_only else args.method
    budget = EnumerationBudget(args.max_functions, args.max_ms)
    rep = sierpinski_dims(G, H, method, budget, args.workers)
    if args.format == "csv":
        print(rep.histogram_csv(), end="")
    elif args.format == "table":
        print(f"dim_S = {rep.dim_s}  Dim_S = {rep.Dim_s}  method = {rep.method}")
        if rep.argmin_f:
            print(f"argmin f = {[h + 1 for h in rep.argmin_f]}")
        if rep.argmax_f:
            print(f"argmax f = {[h + 1 for h in rep.argmax_f]}")
    else:
        print(_dump(rep.to_dict(timing=not args.no_timing)))
    return EXIT_OK


def cmd_convex(args) -> int:
    G, H = load_graph(args.G), load_graph(args.H)
    reports = verify_layer_convexity(sierpinski_product(G, H, parse_function(args.f, G, H)))
    print(_dump([r.to_dict() for r in reports]))
    return EXIT_OK if all(r.convex for r in reports) else EXIT_FAIL


def cmd_verify(args) -> int:
    rows = run_suite(
        args.suite,
        max_n=args.max_n,
        max_t1=args.max_t1,
        max_t2=args.max_t2,
        max_tree=args.max_tree,
        max_path=args.max_path,
        trials=args.trials,
        seed=args.seed,
        workers=args.workers,
    )
    if args.format == "json":
        print(_dump([r.to_dict() for r in rows]))
    else:
        for r in rows:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status}  [{r.suite}] {r.claim} :: {r.instance}  observed={r.observed} expected={r.expected}")
        print(f"{sum(r.passed for r in rows)}/{len(rows)} checks passed")
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sierpinski-dim", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("product", help="build G (x)_f H")
    sp.add_argument("G")
    sp.add_argument("H")
    sp.add_argument("--f", required=True, help="1-based vector, constant:w, mod4:a,b, cycle-triangle, path-tree-witness")
    sp.add_argument("--format", choices=["json", "dot", "table", "text"], default="json")
    sp.set_defaults(func=cmd_product)

    sp = sub.add_parser("dim", help="metric dimension of a graph")
    sp.add_argument("graph")
    sp.add_argument("--method", choices=["auto", "search", "tree-formula"], default="auto")
    sp.add_argument("--max-subsets", type=int)
    sp.add_argument("--max-ms", type=float)
    sp.add_argument("--format", choices=["json", "table", "dot"], default="json")
    sp.add_argument("--no-timing", action="store_true")
    sp.set_defaults(func=cmd_dim)

    sp = sub.add_parser("sdim", help="dim_S and Dim_S of (G, H)")
    sp.add_argument("G")
    sp.add_argument("H")
    sp.add_argument("--method", choices=["auto", "formula", "enumeration"], default="enumeration")
    sp.add_argument("--formula-only", action="store_true")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--max-functions", type=int, default=10**6)
    sp.add_argument("--max-ms", type=float)
    sp.add_argument("--format", choices=["json", "csv", "table"], default="json")
    sp.add_argument("--no-timing", action="store_true")
    sp.set_defaults(func=cmd_sdim)

    sp = sub.add_parser("convex", help="check every layer of G (x)_f H for convexity")
    sp.add_argument("G")
    sp.add_argument("H")
    sp.add_argument("--f", required=True)
    sp.set_defaults(func=cmd_convex)

    sp = sub.add_parser("verify", help="run a claim verification suite")
    sp.add_argument("suite", choices=["tree", "cycle", "convexity", "all"])
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--max-t1", type=int, default=4)
    sp.add_argument("--max-t2", type=int, default=6)
    sp.add_argument("--max-tree", type=int, default=10)
    sp.add_argument("--max-path", type=int, default=5)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=7)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--format", choices=["table", "json"], default="table")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    for name in ("workers", "max_functions", "trials"):
        if getattr(args, name, 1) is not None and getattr(args, name, 1) < 1:
            print(f"error: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except (BudgetExceeded, FunctionSpaceTooLarge) as exc:
        partial = getattr(exc, "partial", None)
        out = {"error": "budget exceeded", "message": str(exc)}
        if isinstance(exc, BudgetExceeded):
            out.update(lower=exc.lower, upper=exc.upper)
            if partial is not None:
                out["partial"] = partial.to_dict(timing=False)
        print(_dump(out))
        return EXIT_BUDGET
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
