"""Sierpinski metric dimension: exhaustive search over H^G and closed forms.

Functions are enumerated as a base-n(H) counter with f[0] the most
significant digit, which is lexicographic order. Parallel runs split the
counter into contiguous ranges and merge them in range order, so witnesses
and counts do not depend on the worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import BudgetExceeded, Disconnected, FunctionSpaceTooLarge, HypothesisViolated, OutOfRange
from .graph import Graph, is_connected, is_path_graph, is_tree, path_endpoints, tree_metrics
from .metric import SearchLimits, metric_dimension_exact, tree_dimension_value
from .product import (
    VertexFunction,
    check_function,
    constant_function,
    cycle_triangle_function,
    path_mod4_function,
    path_tree_leaves,
    product_graph,
)

DEFAULT_MAX_FUNCTIONS = 10**6


@dataclass(frozen=True)
class EnumerationBudget:
    max_functions: int | None = DEFAULT_MAX_FUNCTIONS
    max_ms: float | None = None
    subset_limits: SearchLimits | None = None


@dataclass
class SierpinskiDimensionReport:
    """Extremes of dim(G (x)_f H) over the functions examined.

    ``dim_s`` / ``Dim_s`` may be ``None`` in a formula report when no closed
    form covers that side.
    """

    dim_s: int | None
    Dim_s: int | None
    argmin_f: VertexFunction | None
    argmax_f: VertexFunction | None
    method: str  # "formula" | "enumeration"
    functions_examined: int = 0
    histogram: dict[int, int] | None = None
    exhaustive: bool = True
    early_exit: bool = False
    dim_s_lower: int | None = None
    elapsed_ms: float = 0.0

    def to_dict(self, timing: bool = True) -> dict:
        def show(f):
            return None if f is None else [h + 1 for h in f]

        d = {
            "index_base": 1,
            "dim_s": self.dim_s,
            "Dim_s": self.Dim_s,
            "argmin_f": show(self.argmin_f),
            "argmax_f": show(self.argmax_f),
            "method": self.method,
            "functions_examined": self.functions_examined,
            "exhaustive": self.exhaustive,
            "early_exit": self.early_exit,
        }
        if self.dim_s_lower is not None:
            d["dim_s_lower"] = self.dim_s_lower
        if self.histogram is not None:
            d["histogram"] = {str(k): v for k, v in sorted(self.histogram.items())}
        if timing:
            d["ms"] = round(self.elapsed_ms, 3)
        return d

    def histogram_csv(self) -> str:
        rows = ["dim_value,count"]
        rows.extend(f"{k},{v}" for k, v in sorted((self.histogram or {}).items()))
        return "\n".join(rows) + "\n"


# --- enumeration ----------------------------------------------------------


def function_count(nG: int, nH: int) -> int:
    return nH**nG


def function_at(index: int, nG: int, nH: int) -> VertexFunction:
    digits = [0] * nG
    for pos in range(nG - 1, -1, -1):
        index, digits[pos] = divmod(index, nH)
    return tuple(digits)


def enumerate_functions(
    nG: int, nH: int, start: int = 0, stop: int | None = None, limit: int | None = None
) -> Iterator[VertexFunction]:
    """All functions [nG] -> [nH] in lexicographic order, or the slice [start, stop).

    ``limit`` guards against spaces larger than the caller is willing to walk.
    """
    if nG < 1 or nH < 1:
        raise OutOfRange("both factors need at least one vertex")
    total = nH**nG
    if limit is not None and total > limit:
        raise FunctionSpaceTooLarge(f"{nH}^{nG} = {total} functions exceeds the limit {limit}")
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    digits = list(function_at(start, nG, nH))
    for _ in range(start, stop):
        yield tuple(digits)
        pos = nG - 1
        while pos >= 0:
            digits[pos] += 1
            if digits[pos] < nH:
                break
            digits[pos] = 0
            pos -= 1


def product_dimension(G: Graph, H: Graph, f: Sequence[int], limits: SearchLimits | None = None) -> int:
    """dim(G (x)_f H); the tree closed form is used when both factors are trees."""
    P = product_graph(G, H, f)
    if is_tree(G) and is_tree(H):
        return tree_dimension_value(P)
    return metric_dimension_exact(P, limits).value


@dataclass
class _Partial:
    start: int
    min_val: int | None = None
    min_idx: int = -1
    max_val: int | None = None
    max_idx: int = -1
    hist: dict[int, int] = field(default_factory=dict)
    examined: int = 0
    hit_target: bool = False
    out_of_time: bool = False


def _scan(G, H, start, stop, limits, target, deadline, trees) -> _Partial:
    part = _Partial(start)
    for offset, f in enumerate(enumerate_functions(G.n, H.n, start, stop)):
        if deadline is not None and time.time() > deadline:
            part.out_of_time = True
            break
        P = product_graph(G, H, f)
        d = tree_dimension_value(P) if trees else metric_dimension_exact(P, limits).value
        idx = start + offset
        part.examined += 1
        part.hist[d] = part.hist.get(d, 0) + 1
        if part.min_val is None or d < part.min_val:
            part.min_val, part.min_idx = d, idx
        if part.max_val is None or d > part.max_val:
            part.max_val, part.max_idx = d, idx
        if target is not None and d <= target:
            part.hit_target = True
            break
    return part


def _scan_star(args):
    return _scan(*args)


def _merge(parts: list[_Partial]) -> _Partial:
    out = _Partial(0)
    for p in parts:  # ascending start, so strict comparisons keep the earliest index
        out.examined += p.examined
        for k, v in p.hist.items():
            out.hist[k] = out.hist.get(k, 0) + v
        if p.min_val is not None and (out.min_val is None or p.min_val < out.min_val):
            out.min_val, out.min_idx = p.min_val, p.min_idx
        if p.max_val is not None and (out.max_val is None or p.max_val > out.max_val):
            out.max_val, out.max_idx = p.max_val, p.max_idx
        out.out_of_time |= p.out_of_time
        if p.hit_target:
            out.hit_target = True
            break
        if p.out_of_time:
            break
    return out


def _ranges(total: int, pieces: int) -> list[tuple[int, int]]:
    pieces = max(1, min(pieces, total))
    step, extra = divmod(total, pieces)
    out, lo = [], 0
    for i in range(pieces):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def sierpinski_dims_exhaustive(
    G: Graph,
    H: Graph,
    budget: EnumerationBudget | None = None,
    *,
    workers: int = 1,
    target_dim_s: int | None = None,
    histogram: bool = True,
    chunks: int = 16,
) -> SierpinskiDimensionReport:
    """dim_S and Dim_S of ``(G, H)`` by computing dim(G (x)_f H) for every f.

    With ``target_dim_s`` set, the scan stops at the first function whose
    product has dimension at most the target; ``Dim_s`` is then only the
    maximum seen so far and the report is marked ``early_exit``.

    Raises :class:`BudgetExceeded` with a non-exhaustive partial report when
    the function count or wall-clock budget runs out.
    """
    t0 = time.time()
    if not (is_connected(G) and is_connected(H)):
        raise Disconnected("both factors must be connected")
    budget = budget or EnumerationBudget()
    total = function_count(G.n, H.n)
    span = total if budget.max_functions is None else min(total, budget.max_functions)
    deadline = None if budget.max_ms is None else t0 + budget.max_ms / 1e3
    trees = is_tree(G) and is_tree(H)
    jobs = [
        (G, H, lo, hi, budget.subset_limits, target_dim_s, deadline, trees)
        for lo, hi in _ranges(span, max(chunks, workers))
    ]
    if workers <= 1:
        parts = []
        for job in jobs:
            parts.append(_scan_star(job))
            if parts[-1].hit_target or parts[-1].out_of_time:
                break
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_star, jobs))
    merged = _merge(parts)

    report = SierpinskiDimensionReport(
        dim_s=merged.min_val,
        Dim_s=merged.max_val,
        argmin_f=None if merged.min_val is None else function_at(merged.min_idx, G.n, H.n),
        argmax_f=None if merged.max_val is None else function_at(merged.max_idx, G.n, H.n),
        method="enumeration",
        functions_examined=merged.examined,
        histogram=dict(sorted(merged.hist.items())) if histogram else None,
        exhaustive=merged.examined == total,
        early_exit=merged.hit_target,
        elapsed_ms=(time.time() - t0) * 1e3,
    )
    if not report.exhaustive and not report.early_exit:
        # interval for dim_S; the running extremes live in the partial report
        raise BudgetExceeded(
            f"examined {merged.examined} of {total} functions",
            lower=1 if G.n * H.n >= 2 else 0,
            upper=report.dim_s if report.dim_s is not None else G.n * H.n - 1,
            partial=report,
        )
    return report


# --- closed forms ---------------------------------------------------------


def _require_trees(T1: Graph, T2: Graph) -> None:
    if not (is_tree(T1) and is_tree(T2)):
        raise HypothesisViolated("both factors must be trees")


def tree_upper_formula(T1: Graph, T2: Graph) -> int:
    """Dim_S(T1, T2) = n(T1) * dim(T2), for trees with n(T2) >= 3."""
    _require_trees(T1, T2)
    if T2.n < 3:
        raise HypothesisViolated("second tree needs at least 3 vertices")
    return T1.n * tree_dimension_value(T2)


def tree_lower_bound(T1: Graph, T2: Graph) -> int:
    """Sum over v in T1 of max(0, dim(T2) - deg(v)); T2 must not be a path."""
    _require_trees(T1, T2)
    if is_path_graph(T2):
        raise HypothesisViolated("second tree must not be a path")
    d = tree_dimension_value(T2)
    return sum(max(0, d - deg) for deg in T1.degrees())


def path_tree_formula(n: int, T2: Graph) -> int:
    """dim_S(P_n, T2) = n (dim(T2) - 2) + 2 for n >= 2 and T2 a non-path tree."""
    if n < 2:
        raise HypothesisViolated("path factor needs n >= 2")
    if not is_tree(T2) or is_path_graph(T2):
        raise HypothesisViolated("second factor must be a tree that is not a path")
    return n * (tree_dimension_value(T2) - 2) + 2


def cycle_triangle_dims(n: int) -> tuple[int, int]:
    """(dim_S, Dim_S) of (C_n, C_3)."""
    if n < 3:
        raise OutOfRange("cycle length must be at least 3")
    return 2, n


def path_order(P: Graph) -> list[int]:
    """Vertices of a path graph from its smaller-index end."""
    a, _ = path_endpoints(P)
    order, prev = [a], -1
    while len(order) < P.n:
        cur = order[-1]
        nxt = next(w for w in P.adj[cur] if w != prev)
        prev = cur
        order.append(nxt)
    return order


def cycle_order(C: Graph) -> list[int]:
    """Vertices of a cycle from 0, stepping first to the smaller neighbour."""
    order, prev = [0], -1
    while len(order) < C.n:
        cur = order[-1]
        nxt = min(w for w in C.adj[cur] if w != prev)
        prev = cur
        order.append(nxt)
    return order


def is_cycle_graph(G: Graph) -> bool:
    return G.n >= 3 and is_connected(G) and all(len(a) == 2 for a in G.adj)


def _along(order: list[int], values: Sequence[int]) -> VertexFunction:
    f = [0] * len(order)
    for pos, v in enumerate(order):
        f[v] = values[pos]
    return tuple(f)


def upper_witness_vertex(T2: Graph) -> int:
    """Constant value attaining Dim_S for trees: smallest branch vertex, else smallest inner path vertex."""
    tm = tree_metrics(T2)
    if tm.branch_vertices:
        return tm.branch_vertices[0]
    return min(v for v in range(T2.n) if T2.degree(v) == 2)


def sierpinski_dims_formula(G: Graph, H: Graph) -> SierpinskiDimensionReport:
    """Closed-form dim_S / Dim_S with witness functions, where a closed form applies.

    Raises :class:`HypothesisViolated` when neither side is covered.
    """
    t0 = time.time()
    if is_cycle_graph(G) and H.n == 3 and H.m == 3:
        lo, hi = cycle_triangle_dims(G.n)
        return SierpinskiDimensionReport(
            lo,
            hi,
            _along(cycle_order(G), cycle_triangle_function(G.n)),
            constant_function(G, 0, H),
            "formula",
            exhaustive=False,
            elapsed_ms=(time.time() - t0) * 1e3,
        )
    if not (is_tree(G) and is_tree(H)):
        raise HypothesisViolated("no closed form for these factors")
    dim_s = argmin = lower = None
    Dim_s = argmax = None
    if H.n >= 3:
        Dim_s = tree_upper_formula(G, H)
        argmax = constant_function(G, upper_witness_vertex(H), H)
    if is_path_graph(G) and is_path_graph(H):
        if G.n * H.n >= 2:
            a, b = path_endpoints(H)
            dim_s = 1
            argmin = _along(path_order(G), path_mod4_function(G.n, a, b))
    elif not is_path_graph(H):
        lower = tree_lower_bound(G, H)
        if is_path_graph(G) and G.n >= 2:
            dim_s = path_tree_formula(G.n, H)
            u1, u2 = path_tree_leaves(H)
            argmin = _along(path_order(G), path_mod4_function(G.n, u1, u2))
        elif G.n == 1:
            dim_s = tree_dimension_value(H)
            argmin = (0,)
    if dim_s is None and Dim_s is None:
        raise HypothesisViolated("no closed form for these factors")
    return SierpinskiDimensionReport(
        dim_s,
        Dim_s,
        argmin,
        argmax,
        "formula",
        exhaustive=False,
        dim_s_lower=lower,
        elapsed_ms=(time.time() - t0) * 1e3,
    )


def sierpinski_dims(
    G: Graph,
    H: Graph,
    method: str = "auto",
    budget: EnumerationBudget | None = None,
    workers: int = 1,
) -> SierpinskiDimensionReport:
    """``formula`` / ``enumeration`` / ``auto`` (formula when it covers both sides)."""
    if method == "formula":
        return sierpinski_dims_formula(G, H)
    if method == "auto":
        try:
            rep = sierpinski_dims_formula(G, H)
            if rep.dim_s is not None and rep.Dim_s is not None:
                return rep
        except HypothesisViolated:
            pass
    elif method != "enumeration":
        raise ValueError(f"unknown method {method!r}")
    return sierpinski_dims_exhaustive(G, H, budget, workers=workers)


__all__ = [
    "EnumerationBudget",
    "SierpinskiDimensionReport",
    "check_function",
    "cycle_triangle_dims",
    "enumerate_functions",
    "function_at",
    "function_count",
    "path_tree_formula",
    "product_dimension",
    "sierpinski_dims",
    "sierpinski_dims_exhaustive",
    "sierpinski_dims_formula",
    "tree_lower_bound",
    "tree_upper_formula",
]
