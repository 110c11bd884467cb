"""Claim-by-claim verification suites behind ``sierpinski-dim verify``.

Each suite yields :class:`Check` rows holding the observed and expected
value of one claim on one instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Iterator

from .convexity import is_convex_subgraph, verify_layer_convexity
from .families import (
    cycle_graph,
    fk_graph,
    fk_u,
    nonisomorphic_trees,
    path_graph,
    random_connected_graph,
)
from .graph import Graph, is_path_graph
from .isomorphism import are_isomorphic
from .metric import is_resolving_set, metric_dimension_exact, tree_metric_dimension
from .product import (
    constant_function,
    cycle_triangle_function,
    path_mod4_function,
    path_tree_witness_function,
    sierpinski_product,
    z_resolving_set,
)
from .search import (
    path_tree_formula,
    product_dimension,
    sierpinski_dims_exhaustive,
    tree_lower_bound,
    tree_upper_formula,
    upper_witness_vertex,
)


@dataclass(frozen=True)
class Check:
    suite: str
    claim: str
    instance: str
    observed: Any
    expected: Any
    passed: bool

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "claim": self.claim,
            "instance": self.instance,
            "observed": self.observed,
            "expected": self.expected,
            "status": "PASS" if self.passed else "FAIL",
        }


def _eq(suite, claim, instance, observed, expected) -> Check:
    return Check(suite, claim, instance, observed, expected, observed == expected)


def tree_name(T: Graph) -> str:
    return f"T{T.n}[" + " ".join(f"{u}-{v}" for u, v in T.edges) + "]"


def tree_formula_checks(max_n: int = 10) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        for T in nonisomorphic_trees(n):
            yield _eq(
                "tree",
                "tree formula = exact search",
                tree_name(T),
                tree_metric_dimension(T).value,
                metric_dimension_exact(T).value,
            )


def tree_pair_checks(max_t1: int = 4, max_t2: int = 6, workers: int = 1) -> Iterator[Check]:
    """Upper formula, constant witness, lower-bound sandwich and path x tree formula."""
    for n1 in range(1, max_t1 + 1):
        for T1 in nonisomorphic_trees(n1):
            for n2 in range(3, max_t2 + 1):
                for T2 in nonisomorphic_trees(n2):
                    name = f"{tree_name(T1)} x {tree_name(T2)}"
                    rep = sierpinski_dims_exhaustive(T1, T2, workers=workers)
                    upper = tree_upper_formula(T1, T2)
                    yield _eq("tree", "Dim_S = n(T1) dim(T2)", name, rep.Dim_s, upper)
                    fw = constant_function(T1, upper_witness_vertex(T2), T2)
                    yield _eq("tree", "constant function attains Dim_S", name, product_dimension(T1, T2, fw), upper)
                    if is_path_graph(T2):
                        continue
                    lb = tree_lower_bound(T1, T2)
                    yield Check("tree", "lower bound <= dim_S", name, rep.dim_s, f">={lb}", lb <= rep.dim_s)
                    if is_path_graph(T1) and n1 >= 2:
                        want = path_tree_formula(n1, T2)
                        yield _eq("tree", "dim_S(P_n,T2) = n(dim(T2)-2)+2", name, rep.dim_s, want)
                        f = path_tree_witness_function(n1, T2)
                        yield _eq("tree", "mod-4 function attains dim_S", name, product_dimension(T1, T2, f), want)


def path_pair_checks(max_n: int = 5, workers: int = 1) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        for m in range(1, max_n + 1):
            if n * m < 2:
                continue
            Pn, Pm = path_graph(n), path_graph(m)
            name = f"P{n} x P{m}"
            rep = sierpinski_dims_exhaustive(Pn, Pm, workers=workers)
            yield _eq("tree", "dim_S(P_n,P_m) = 1", name, rep.dim_s, 1)
            prod = sierpinski_product(Pn, Pm, path_mod4_function(n, 0, m - 1)).graph
            yield _eq("tree", "mod-4 product is P_nm", name, are_isomorphic(prod, path_graph(n * m)), True)


def fk_checks(k_max: int = 8) -> Iterator[Check]:
    for k in range(3, k_max + 1):
        S = (fk_u(k, 0), fk_u(k, 2 * ((k + 1) // 2 - 1)))
        F = fk_graph(k)
        yield _eq("cycle", "dim(F_k) = 2", f"F{k}", metric_dimension_exact(F).value, 2)
        yield _eq("cycle", "{u_0, u_2(ceil(k/2)-1)} resolves F_k", f"F{k}", is_resolving_set(F, S), True)


def cycle_checks(max_n: int = 6, workers: int = 1, iso_max: int = 10) -> Iterator[Check]:
    C3 = cycle_graph(3)
    for n in range(3, max_n + 1):
        Cn = cycle_graph(n)
        name = f"C{n} x C3"
        rep = sierpinski_dims_exhaustive(Cn, C3, workers=workers)
        yield _eq("cycle", "dim_S(C_n,C_3) = 2", name, rep.dim_s, 2)
        yield _eq("cycle", "Dim_S(C_n,C_3) = n", name, rep.Dim_s, n)
        const = constant_function(Cn, 0, C3)
        d = product_dimension(Cn, C3, const)
        yield Check("cycle", "constant function has dim >= n", name, d, f">={n}", d >= n)
        yield _eq("cycle", "f_n attains 2", name, product_dimension(Cn, C3, cycle_triangle_function(n)), 2)
        for label, f in (("f_n", cycle_triangle_function(n)), ("constant", const)):
            P = sierpinski_product(Cn, C3, f)
            yield _eq("cycle", f"Z set resolves ({label})", name, is_resolving_set(P.graph, z_resolving_set(P)), True)
    for n in range(3, iso_max + 1):
        P = sierpinski_product(cycle_graph(n), C3, cycle_triangle_function(n))
        yield _eq("cycle", "C_n x_{f_n} C_3 = F_n", f"n={n}", are_isomorphic(P.graph, fk_graph(n)), True)
    yield from fk_checks()


def random_instance(rng: random.Random, max_vertices: int = 6):
    G = random_connected_graph(rng.randint(1, max_vertices), rng)
    H = random_connected_graph(rng.randint(1, max_vertices), rng)
    f = tuple(rng.randrange(H.n) for _ in range(G.n))
    return G, H, f


def convexity_checks(trials: int = 100, seed: int = 7) -> Iterator[Check]:
    rng = random.Random(seed)
    bad = []
    for t in range(trials):
        G, H, f = random_instance(rng)
        for r in verify_layer_convexity(sierpinski_product(G, H, f), f"trial{t}"):
            if not r.convex:
                bad.append((r.graph_id, r.violation))
    yield Check("convexity", "every layer gH is convex", f"{trials} random products, seed {seed}", len(bad), 0, not bad)
    control = is_convex_subgraph(cycle_graph(6), [0, 1, 2, 3], "C6")
    yield _eq("convexity", "control arc {0,1,2,3} of C6 flagged", "C6", control.convex, False)


def run_suite(name: str, **opts) -> list[Check]:
    workers = opts.get("workers", 1)
    rows: list[Check] = []
    if name in ("tree", "all"):
        rows += tree_formula_checks(opts.get("max_tree", 10))
        rows += tree_pair_checks(opts.get("max_t1", 4), opts.get("max_t2", 6), workers)
        rows += path_pair_checks(opts.get("max_path", 5), workers)
    if name in ("cycle", "all"):
        rows += cycle_checks(opts.get("max_n", 6), workers, opts.get("iso_max", 10))
    if name in ("convexity", "all"):
        rows += convexity_checks(opts.get("trials", 100), opts.get("seed", 7))
    if name not in ("tree", "cycle", "convexity", "all"):
        raise ValueError(f"unknown suite {name!r}")
    return rows
