"""Acceptance criteria 1-10.

Each test appends one PASS/FAIL line to ``conftest.ACCEPTANCE_LINES``; the
lines are printed in the terminal summary. Time limits are asserted.
"""

import json
import math
import random
import time
from functools import lru_cache

import pytest

import conftest
from sierpinski_dim.convexity import is_convex_subgraph, verify_layer_convexity
from sierpinski_dim.families import cycle_graph, fk_graph, fk_u, nonisomorphic_trees, path_graph
from sierpinski_dim.graph import is_path_graph
from sierpinski_dim.isomorphism import are_isomorphic
from sierpinski_dim.metric import is_resolving_set, metric_dimension_exact, tree_metric_dimension
from sierpinski_dim.product import (
    constant_function,
    cycle_triangle_function,
    path_mod4_function,
    path_tree_witness_function,
    sierpinski_product,
)
from sierpinski_dim.search import (
    enumerate_functions,
    path_tree_formula,
    product_dimension,
    sierpinski_dims_exhaustive,
    tree_lower_bound,
    tree_upper_formula,
    upper_witness_vertex,
)
from sierpinski_dim.verify import random_instance, tree_name


def record(num, title, failures, elapsed, limit=None, checked=None):
    ok = not failures and (limit is None or elapsed < limit)
    bound = f" (limit {limit:g}s)" if limit else ""
    count = f", {checked} checks" if checked is not None else ""
    line = f"{'PASS' if ok else 'FAIL'}  criterion {num:>2}: {title} [{elapsed:.2f}s{bound}{count}]"
    if failures:
        line += f" first failure: {failures[0]}"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failures, failures[:5]
    if limit is not None:
        assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


# --- shared instance lists --------------------------------------------------


def tree_pairs():
    """Criterion 5 instances: n(T1) <= 4, 3 <= n(T2) <= 6."""
    return [
        (T1, T2)
        for n1 in range(1, 5)
        for T1 in nonisomorphic_trees(n1)
        for n2 in range(3, 7)
        for T2 in nonisomorphic_trees(n2)
    ]


def path_tree_pairs():
    """Criterion 6 instances: P_n for n = 2..4 against non-path trees on <= 6 vertices."""
    return [
        (path_graph(n), T2)
        for n in range(2, 5)
        for n2 in range(4, 7)
        for T2 in nonisomorphic_trees(n2)
        if not is_path_graph(T2)
    ]


def path_path_pairs():
    return [(n, m) for n in range(1, 6) for m in range(1, 6) if n * m >= 2]


@lru_cache(maxsize=None)
def _exhaustive(G, H, workers=1):
    return sierpinski_dims_exhaustive(G, H, workers=workers)


# --- criteria ---------------------------------------------------------------


def test_criterion_01_tree_formula():
    def run():
        bad, count = [], 0
        for n in range(1, 11):
            for T in nonisomorphic_trees(n):
                count += 1
                a, b = tree_metric_dimension(T).value, metric_dimension_exact(T).value
                if a != b:
                    bad.append((tree_name(T), a, b))
        return bad, count

    (bad, count), dt = timed(run)
    assert count == 201
    record(1, "tree formula equals exact search, all trees n <= 10", bad, dt, 60, count)


def test_criterion_02_fk_dimension():
    def run():
        bad = []
        for k in range(3, 9):
            F = fk_graph(k)
            S = (fk_u(k, 0), fk_u(k, 2 * (math.ceil(k / 2) - 1)))
            if metric_dimension_exact(F).value != 2:
                bad.append(f"dim(F{k}) != 2")
            if not is_resolving_set(F, S):
                bad.append(f"{S} does not resolve F{k}")
        return bad

    bad, dt = timed(run)
    record(2, "dim(F_k) = 2 with witness {u_0, u_2(ceil(k/2)-1)}, k = 3..8", bad, dt, 10, 12)


def test_criterion_03_cycle_triangle():
    def run():
        bad, count = [], 0
        C3 = cycle_graph(3)
        for n in range(3, 7):
            Cn = cycle_graph(n)
            rep = _exhaustive(Cn, C3)
            count += rep.functions_examined
            if not rep.exhaustive or (rep.dim_s, rep.Dim_s) != (2, n):
                bad.append((f"C{n}", rep.dim_s, rep.Dim_s))
            d_const = product_dimension(Cn, C3, constant_function(Cn, 0, C3))
            if d_const < n:
                bad.append((f"C{n} constant", d_const))
            d_fn = product_dimension(Cn, C3, cycle_triangle_function(n))
            if d_fn != 2:
                bad.append((f"C{n} f_n", d_fn))
        return bad, count

    (bad, count), dt = timed(run)
    assert count == sum(3**n for n in range(3, 7))
    record(3, "(dim_S, Dim_S)(C_n, C_3) = (2, n) by exhaustion, n = 3..6", bad, dt, 300, count)


def test_criterion_04_fn_isomorphism():
    def run():
        bad = []
        for n in range(3, 11):
            P = sierpinski_product(cycle_graph(n), cycle_graph(3), cycle_triangle_function(n))
            if not are_isomorphic(P.graph, fk_graph(n)):
                bad.append(n)
        return bad

    bad, dt = timed(run)
    record(4, "C_n (x)_{f_n} C_3 isomorphic to F_n, n = 3..10", bad, dt, 30, 8)


def test_criterion_05_tree_upper():
    def run():
        bad, count = [], 0
        for T1, T2 in tree_pairs():
            name = f"{tree_name(T1)} x {tree_name(T2)}"
            rep = _exhaustive(T1, T2)
            want = tree_upper_formula(T1, T2)
            count += 1
            if not rep.exhaustive or rep.Dim_s != want:
                bad.append((name, rep.Dim_s, want))
            if not is_path_graph(T2):
                count += 1
                fw = constant_function(T1, upper_witness_vertex(T2), T2)
                got = product_dimension(T1, T2, fw)
                if got != want:
                    bad.append((name, "f_w", got, want))
        return bad, count

    (bad, count), dt = timed(run)
    record(5, "Dim_S(T1, T2) = n(T1) dim(T2) and f_w attains it", bad, dt, 120, count)


def test_criterion_06_path_tree():
    def run():
        bad, count = [], 0
        for Pn, T2 in path_tree_pairs():
            name = f"P{Pn.n} x {tree_name(T2)}"
            want = path_tree_formula(Pn.n, T2)
            rep = _exhaustive(Pn, T2)
            got_f = product_dimension(Pn, T2, path_tree_witness_function(Pn.n, T2))
            count += 2
            if not rep.exhaustive or rep.dim_s != want:
                bad.append((name, rep.dim_s, want))
            if got_f != want:
                bad.append((name, "mod-4 witness", got_f, want))
        return bad, count

    (bad, count), dt = timed(run)
    record(6, "dim_S(P_n, T2) = n(dim(T2) - 2) + 2 and the mod-4 witness attains it", bad, dt, 120, count)


def test_criterion_07_sandwich():
    def run():
        bad, count = [], 0
        seen = set()
        for T1, T2 in tree_pairs() + path_tree_pairs():
            key = (T1, T2)
            if is_path_graph(T2) or key in seen:
                continue
            seen.add(key)
            rep = _exhaustive(T1, T2)
            lb = tree_lower_bound(T1, T2)
            count += 1
            if not lb <= rep.dim_s <= rep.Dim_s:
                bad.append((tree_name(T1), tree_name(T2), lb, rep.dim_s))
        return bad, count

    (bad, count), dt = timed(run)
    record(7, "tree lower bound <= dim_S on every non-path instance of 5 and 6", bad, dt, None, count)


def test_criterion_08_paths():
    def run():
        bad = []
        for n, m in path_path_pairs():
            Pn, Pm = path_graph(n), path_graph(m)
            rep = _exhaustive(Pn, Pm)
            if rep.dim_s != 1:
                bad.append((n, m, rep.dim_s))
            prod = sierpinski_product(Pn, Pm, path_mod4_function(n, 0, m - 1)).graph
            if not are_isomorphic(prod, path_graph(n * m)):
                bad.append((n, m, "not a path"))
        return bad

    bad, dt = timed(run)
    record(8, "dim_S(P_n, P_m) = 1 and the mod-4 product is P_nm, n, m <= 5, nm >= 2", bad, dt, 60, 2 * 24)


def test_criterion_09_convexity():
    def instances():
        rng = random.Random(7)
        for _ in range(100):
            yield random_instance(rng)
        C3 = cycle_graph(3)
        for n in range(3, 7):
            for f in enumerate_functions(n, 3):
                yield cycle_graph(n), C3, f
        pairs = set(tree_pairs()) | set(path_tree_pairs())
        pairs |= {(path_graph(n), path_graph(m)) for n, m in path_path_pairs()}
        for G, H in sorted(pairs, key=lambda p: (p[0].n, p[1].n, p[0].edges, p[1].edges)):
            for f in enumerate_functions(G.n, H.n):
                yield G, H, f

    def run():
        bad, products = [], 0
        for G, H, f in instances():
            products += 1
            for rep in verify_layer_convexity(sierpinski_product(G, H, f)):
                if not rep.convex:
                    bad.append((G.edges, H.edges, f, rep.subgraph, rep.violation))
        control = is_convex_subgraph(cycle_graph(6), [0, 1, 2, 3], "C6")
        if control.convex:
            bad.append("C6 control arc not flagged")
        return bad, products

    (bad, products), dt = timed(run)
    record(9, "every layer convex: 100 random + all products of 3-8; C6 control flagged", bad, dt, 60, products)


def _reports(workers):
    out = []
    C3 = cycle_graph(3)
    for n in range(3, 7):
        out.append(sierpinski_dims_exhaustive(cycle_graph(n), C3, workers=workers).to_dict(timing=False))
    for G, H in tree_pairs() + path_tree_pairs():
        out.append(sierpinski_dims_exhaustive(G, H, workers=workers).to_dict(timing=False))
    return json.dumps(out, sort_keys=True).encode()


@pytest.mark.parametrize("workers", [4])
def test_criterion_10_determinism(workers):
    def run():
        a, b = _reports(1), _reports(workers)
        return ([] if a == b else ["JSON differs between worker counts"]), len(a)

    (bad, size), dt = timed(run)
    record(10, f"criteria 3, 5, 6 reports byte-identical with 1 and {workers} workers ({size} bytes)", bad, dt)
