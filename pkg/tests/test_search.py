import itertools
import json

import pytest

from sierpinski_dim.errors import BudgetExceeded, Disconnected, FunctionSpaceTooLarge, HypothesisViolated, OutOfRange
from sierpinski_dim.families import (
    complete_graph,
    cycle_graph,
    double_spider,
    nonisomorphic_trees,
    path_graph,
    spider,
    star_graph,
)
from sierpinski_dim.graph import build_graph, is_path_graph
from sierpinski_dim.metric import metric_dimension_exact
from sierpinski_dim.product import sierpinski_product
from sierpinski_dim.search import (
    EnumerationBudget,
    cycle_triangle_dims,
    enumerate_functions,
    function_at,
    path_tree_formula,
    product_dimension,
    sierpinski_dims,
    sierpinski_dims_exhaustive,
    sierpinski_dims_formula,
    tree_lower_bound,
    tree_upper_formula,
)

from oracles import brute_metric_dimension, brute_product_edges


def brute_dims(G, H):
    """(min, max, first argmin, first argmax) by brute force from the definition."""
    best = {}
    for f in itertools.product(range(H.n), repeat=G.n):
        pairs = sorted({x for e in brute_product_edges(G, H, f) for x in e} | {(g, h) for g in range(G.n) for h in range(H.n)})
        idx = {p: i for i, p in enumerate(pairs)}
        P = build_graph(len(pairs), [tuple(idx[x] for x in e) for e in brute_product_edges(G, H, f)])
        best[f] = brute_metric_dimension(P)[0]
    lo, hi = min(best.values()), max(best.values())
    return lo, hi, min(f for f in best if best[f] == lo), min(f for f in best if best[f] == hi)


class TestEnumeration:
    def test_two_by_two(self):
        assert list(enumerate_functions(2, 2)) == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_counts(self):
        assert sum(1 for _ in enumerate_functions(5, 3)) == 243
        assert list(enumerate_functions(1, 4)) == [(0,), (1,), (2,), (3,)]

    def test_lexicographic_and_unique(self):
        fs = list(enumerate_functions(4, 3))
        assert fs == sorted(fs) == list(itertools.product(range(3), repeat=4))

    def test_ranges_partition(self):
        whole = list(enumerate_functions(4, 3))
        parts = []
        for lo in range(0, 81, 17):
            parts += list(enumerate_functions(4, 3, lo, lo + 17))
        assert parts == whole
        assert function_at(50, 4, 3) == whole[50]

    def test_guard(self):
        with pytest.raises(FunctionSpaceTooLarge):
            next(enumerate_functions(20, 5, limit=10**6))
        with pytest.raises(OutOfRange):
            next(enumerate_functions(0, 3))


class TestExhaustive:
    def test_c5_c3(self):
        rep = sierpinski_dims_exhaustive(cycle_graph(5), cycle_graph(3))
        assert (rep.dim_s, rep.Dim_s) == (2, 5)
        assert rep.functions_examined == 243 and rep.exhaustive
        assert sum(rep.histogram.values()) == 243

    def test_p2_p2(self):
        assert sierpinski_dims_exhaustive(path_graph(2), path_graph(2)).dim_s == 1

    def test_p3_star(self):
        rep = sierpinski_dims_exhaustive(path_graph(3), star_graph(3))
        assert (rep.dim_s, rep.Dim_s) == (2, 6)
        assert rep.functions_examined == 64

    @pytest.mark.parametrize(
        "G, H",
        [
            (path_graph(3), star_graph(3)),
            (cycle_graph(3), cycle_graph(3)),
            (cycle_graph(4), cycle_graph(3)),
            (path_graph(2), cycle_graph(4)),
            (star_graph(2), complete_graph(3)),
            (cycle_graph(3), path_graph(3)),
            (path_graph(2), double_spider()),
        ],
    )
    def test_matches_brute_force(self, G, H):
        lo, hi, fmin, fmax = brute_dims(G, H)
        rep = sierpinski_dims_exhaustive(G, H)
        assert (rep.dim_s, rep.Dim_s) == (lo, hi)
        assert (rep.argmin_f, rep.argmax_f) == (fmin, fmax)
        assert product_dimension(G, H, rep.argmin_f) == lo
        assert product_dimension(G, H, rep.argmax_f) == hi

    def test_tree_fast_path_matches_search(self, rng):
        for _ in range(40):
            T1s = nonisomorphic_trees(rng.randint(2, 4))
            T1 = T1s[rng.randrange(len(T1s))]
            T2s = nonisomorphic_trees(rng.randint(3, 5))
            T2 = T2s[rng.randrange(len(T2s))]
            f = tuple(rng.randrange(T2.n) for _ in range(T1.n))
            P = sierpinski_product(T1, T2, f).graph
            assert product_dimension(T1, T2, f) == metric_dimension_exact(P).value

    def test_workers_do_not_change_result(self):
        a = sierpinski_dims_exhaustive(cycle_graph(4), cycle_graph(3), workers=1)
        b = sierpinski_dims_exhaustive(cycle_graph(4), cycle_graph(3), workers=3, chunks=5)
        assert a.to_dict(timing=False) == b.to_dict(timing=False)

    def test_target_early_exit(self):
        rep = sierpinski_dims_exhaustive(cycle_graph(6), cycle_graph(3), target_dim_s=2)
        assert rep.early_exit and rep.dim_s == 2
        full = sierpinski_dims_exhaustive(cycle_graph(6), cycle_graph(3))
        assert rep.argmin_f == full.argmin_f
        # the scan stops right at the first function attaining 2
        assert rep.functions_examined == full_index(full.argmin_f, 3) + 1
        par = sierpinski_dims_exhaustive(cycle_graph(6), cycle_graph(3), target_dim_s=2, workers=2)
        assert par.to_dict(timing=False) == rep.to_dict(timing=False)

    def test_function_budget(self):
        with pytest.raises(BudgetExceeded) as exc:
            sierpinski_dims_exhaustive(cycle_graph(6), cycle_graph(3), EnumerationBudget(max_functions=100))
        part = exc.value.partial
        assert not part.exhaustive and part.functions_examined == 100
        assert exc.value.lower <= part.dim_s == exc.value.upper

    def test_time_budget(self):
        with pytest.raises(BudgetExceeded) as exc:
            sierpinski_dims_exhaustive(cycle_graph(8), cycle_graph(3), EnumerationBudget(max_ms=1))
        assert not exc.value.partial.exhaustive

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            sierpinski_dims_exhaustive(build_graph(2, []), path_graph(2))

    def test_json_and_csv(self):
        rep = sierpinski_dims_exhaustive(cycle_graph(3), cycle_graph(3))
        d = rep.to_dict(timing=False)
        assert d["index_base"] == 1 and d["histogram"] == {"2": 24, "3": 3}
        assert d["argmax_f"] == [1, 1, 1]
        assert json.loads(json.dumps(d)) == d
        assert rep.histogram_csv() == "dim_value,count\n2,24\n3,3\n"


def full_index(f, nH):
    idx = 0
    for h in f:
        idx = idx * nH + h
    return idx


class TestFormulas:
    def test_upper(self):
        assert tree_upper_formula(path_graph(4), star_graph(3)) == 8
        assert tree_upper_formula(path_graph(1), path_graph(3)) == 1
        assert tree_upper_formula(path_graph(2), path_graph(3)) == 2
        assert sierpinski_dims_exhaustive(path_graph(2), path_graph(3)).Dim_s == 2
        with pytest.raises(HypothesisViolated):
            tree_upper_formula(path_graph(3), path_graph(2))
        with pytest.raises(HypothesisViolated):
            tree_upper_formula(cycle_graph(3), path_graph(4))

    def test_lower_bound(self):
        assert tree_lower_bound(path_graph(3), star_graph(3)) == 2
        # dim(spider with 5 legs of length 2) = 4; degrees (3,1,1,1) -> 1+3+3+3
        T2 = spider([2] * 5)
        assert tree_lower_bound(star_graph(3), T2) == 10
        assert tree_lower_bound(star_graph(5), star_graph(3)) == 5
        assert tree_lower_bound(path_graph(1), star_graph(3)) == 2
        with pytest.raises(HypothesisViolated):
            tree_lower_bound(path_graph(3), path_graph(4))

    def test_path_tree(self):
        assert path_tree_formula(2, star_graph(3)) == 2
        assert path_tree_formula(5, star_graph(4)) == 7
        assert path_tree_formula(3, star_graph(3)) == sierpinski_dims_exhaustive(path_graph(3), star_graph(3)).dim_s
        with pytest.raises(HypothesisViolated):
            path_tree_formula(1, star_graph(3))
        with pytest.raises(HypothesisViolated):
            path_tree_formula(3, path_graph(4))

    def test_cycles(self):
        assert cycle_triangle_dims(3) == (2, 3)
        assert cycle_triangle_dims(6) == (2, 6)
        rep = sierpinski_dims_exhaustive(cycle_graph(4), cycle_graph(3))
        assert (rep.dim_s, rep.Dim_s) == cycle_triangle_dims(4) == (2, 4)
        with pytest.raises(OutOfRange):
            cycle_triangle_dims(2)


class TestFormulaReports:
    @pytest.mark.parametrize(
        "G, H",
        [
            (cycle_graph(5), cycle_graph(3)),
            (path_graph(3), star_graph(3)),
            (path_graph(4), double_spider()),
            (path_graph(3), path_graph(4)),
            (star_graph(3), path_graph(3)),
            (path_graph(1), star_graph(4)),
            (build_graph(4, [(0, 2), (2, 3), (3, 1)]), star_graph(3)),
        ],
    )
    def test_witnesses_attain_formula(self, G, H):
        rep = sierpinski_dims_formula(G, H)
        assert rep.method == "formula"
        if rep.dim_s is not None:
            assert product_dimension(G, H, rep.argmin_f) == rep.dim_s
        if rep.Dim_s is not None:
            assert product_dimension(G, H, rep.argmax_f) == rep.Dim_s
        full = sierpinski_dims_exhaustive(G, H)
        assert rep.dim_s in (None, full.dim_s)
        assert rep.Dim_s in (None, full.Dim_s)
        if rep.dim_s_lower is not None:
            assert rep.dim_s_lower <= full.dim_s

    def test_general_tree_has_only_upper(self):
        rep = sierpinski_dims_formula(star_graph(3), star_graph(3))
        # dim(K_{1,3}) = 2 against degrees (3,1,1,1): 0 + 1 + 1 + 1
        assert rep.dim_s is None and rep.Dim_s == 8 and rep.dim_s_lower == 3

    def test_uncovered(self):
        with pytest.raises(HypothesisViolated):
            sierpinski_dims_formula(cycle_graph(4), cycle_graph(4))

    def test_dispatch(self):
        assert sierpinski_dims(cycle_graph(7), cycle_graph(3)).method == "formula"
        assert sierpinski_dims(star_graph(3), star_graph(3)).method == "enumeration"
        assert sierpinski_dims(cycle_graph(3), cycle_graph(4)).method == "enumeration"
        with pytest.raises(ValueError):
            sierpinski_dims(cycle_graph(3), cycle_graph(3), "guess")


def test_sandwich_small_trees():
    for n1 in range(1, 5):
        for T1 in nonisomorphic_trees(n1):
            for n2 in range(4, 7):
                for T2 in nonisomorphic_trees(n2):
                    if is_path_graph(T2):
                        continue
                    rep = sierpinski_dims_exhaustive(T1, T2)
                    assert tree_lower_bound(T1, T2) <= rep.dim_s <= rep.Dim_s == tree_upper_formula(T1, T2)
