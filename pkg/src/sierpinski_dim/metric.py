"""Resolving sets and metric dimension.

The exact solver tries candidate sizes upward from a twin-class lower bound
and, within a size, walks subsets in lexicographic order, testing them in
numpy batches. The first resolving subset found is the witness, so the
result does not depend on batch size.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BudgetExceeded,
    Disconnected,
    EmptySetOnNontrivialGraph,
    IsAPath,
    NotATree,
    OutOfRange,
)
from .graph import Graph, distance_matrix, is_connected, is_path_graph, is_tree, tree_metrics

BATCH = 2048
_KEY_LIMIT = 1 << 62


@dataclass(frozen=True)
class SearchLimits:
    """Budget for an exact search. ``None`` means unlimited."""

    max_subsets: int | None = None
    max_ms: float | None = None


@dataclass(frozen=True)
class MetricRepresentation:
    landmarks: tuple[int, ...]
    vectors: np.ndarray  # vectors[v, i] = d(v, landmarks[i])

    def of(self, v: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.vectors[v])


@dataclass
class DimensionReport:
    value: int
    witness: tuple[int, ...] | None
    method: str  # "formula" | "search"
    subsets_examined: int = 0
    elapsed_ms: float = 0.0

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "value": self.value,
            "witness": list(self.witness) if self.witness is not None else None,
            "method": self.method,
            "subsets_examined": self.subsets_examined,
        }
        if timing:
            d["ms"] = round(self.elapsed_ms, 3)
        return d


def _require_connected(G: Graph) -> None:
    if not is_connected(G):
        raise Disconnected("graph must be connected")


def metric_representation(G: Graph, S: Sequence[int]) -> MetricRepresentation:
    S = tuple(S)
    for s in S:
        if not 0 <= s < G.n:
            raise OutOfRange(f"landmark {s} is not a vertex")
    D = distance_matrix(G)
    return MetricRepresentation(S, D[:, list(S)] if S else np.zeros((G.n, 0), np.int64))


def is_resolving_set(G: Graph, S: Iterable[int]) -> bool:
    """True iff the distance vectors to ``S`` are pairwise distinct."""
    _require_connected(G)
    S = sorted(set(S))
    if not S:
        if G.n <= 1:
            return True
        raise EmptySetOnNontrivialGraph("the empty set resolves only graphs with at most one vertex")
    rep = metric_representation(G, S)
    return len({tuple(row) for row in rep.vectors.tolist()}) == G.n


def twin_classes(G: Graph) -> list[tuple[int, ...]]:
    """Classes of vertices sharing an open or a closed neighbourhood."""
    parent = list(range(G.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for key in (lambda v: G.adj[v], lambda v: tuple(sorted(G.adj[v] + (v,)))):
        first: dict[tuple[int, ...], int] = {}
        for v in range(G.n):
            k = key(v)
            if k in first:
                parent[find(v)] = find(first[k])
            else:
                first[k] = v
    groups: dict[int, list[int]] = {}
    for v in range(G.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(tuple(g) for g in groups.values())


def twin_lower_bound(G: Graph) -> int:
    """Every resolving set misses at most one vertex of each twin class."""
    return sum(len(c) - 1 for c in twin_classes(G))


def _resolving_mask(D: np.ndarray, combos: np.ndarray, base: int) -> np.ndarray:
    """For each row of ``combos`` (a landmark tuple), whether it resolves."""
    n = D.shape[0]
    keys = D[:, combos[:, 0]].copy()  # (n, B)
    for j in range(1, combos.shape[1]):
        if int(keys.max(initial=0)) >= _KEY_LIMIT // base:
            # re-rank per column to keep the packed keys inside int64
            order = np.argsort(keys, axis=0, kind="stable")
            srt = np.take_along_axis(keys, order, 0)
            step = np.vstack([np.zeros((1, srt.shape[1]), np.int64), (np.diff(srt, axis=0) != 0)])
            ranks = np.empty_like(keys)
            np.put_along_axis(ranks, order, step.cumsum(axis=0), 0)
            keys = ranks
        keys = keys * base + D[:, combos[:, j]]
    keys.sort(axis=0)
    if n < 2:
        return np.ones(combos.shape[0], bool)
    return ~(np.diff(keys, axis=0) == 0).any(axis=0)


def first_resolving_subset(
    G: Graph, k: int, *, max_subsets: int | None = None, deadline: float | None = None
) -> tuple[tuple[int, ...] | None, int, bool]:
    """Lexicographically first resolving ``k``-subset.

    Returns ``(subset or None, subsets examined, finished)``; ``finished`` is
    False when the budget ran out before the size-``k`` space was exhausted.
    """
    D = distance_matrix(G)
    base = int(D.max(initial=0)) + 1
    it = itertools.combinations(range(G.n), k)
    examined = 0
    while True:
        take = BATCH
        if max_subsets is not None:
            take = min(take, max_subsets - examined)
            if take <= 0:
                return None, examined, False
        if deadline is not None and time.perf_counter() > deadline:
            return None, examined, False
        chunk = list(itertools.islice(it, take))
        if not chunk:
            return None, examined, True
        combos = np.array(chunk, dtype=np.intp).reshape(len(chunk), k)
        hits = np.flatnonzero(_resolving_mask(D, combos, base))
        if hits.size:
            i = int(hits[0])
            return tuple(int(x) for x in combos[i]), examined + i + 1, True
        examined += len(chunk)


def metric_dimension_exact(G: Graph, limits: SearchLimits | None = None) -> DimensionReport:
    """Exact metric dimension of a connected graph, with a witness basis.

    Raises :class:`BudgetExceeded` carrying a ``[lower, upper]`` interval if
    the limits are hit first.
    """
    t0 = time.perf_counter()
    _require_connected(G)
    if G.n == 0:
        raise OutOfRange("graph has no vertices")
    if G.n == 1:
        return DimensionReport(0, (), "search", 0, (time.perf_counter() - t0) * 1e3)
    limits = limits or SearchLimits()
    deadline = None if limits.max_ms is None else t0 + limits.max_ms / 1e3
    lower = max(twin_lower_bound(G), 1)
    examined = 0
    for k in range(lower, G.n):
        budget = None if limits.max_subsets is None else limits.max_subsets - examined
        found, count, finished = first_resolving_subset(G, k, max_subsets=budget, deadline=deadline)
        examined += count
        if found is not None:
            return DimensionReport(k, found, "search", examined, (time.perf_counter() - t0) * 1e3)
        if not finished:
            raise BudgetExceeded(
                f"metric dimension search stopped after {examined} subsets",
                lower=k,
                upper=G.n - 1,
            )
    # every (n-1)-subset resolves a connected graph, so this is unreachable
    raise AssertionError("no resolving set of size n-1 found")


def standard_metric_basis(T: Graph) -> tuple[int, ...]:
    """All terminal leaves except the smallest-index one, per exterior branch vertex."""
    if not is_tree(T):
        raise NotATree("standard metric basis needs a tree")
    if is_path_graph(T):
        raise IsAPath("paths have no standard metric basis")
    tm = tree_metrics(T)
    basis: list[int] = []
    for b in tm.exterior_branch:
        basis.extend(tm.terminal_leaves[b][1:])
    return tuple(sorted(basis))


def tree_dimension_value(T: Graph) -> int:
    """The tree closed form, without building a witness. Assumes ``T`` is a tree."""
    if T.n == 1:
        return 0
    tm = tree_metrics(T)
    if not tm.branch_vertices:
        return 1
    return tm.n1 - tm.ex


def tree_metric_dimension(T: Graph) -> DimensionReport:
    """dim(T) = (#leaves) - (#exterior branch vertices), 1 for paths, 0 for K1."""
    t0 = time.perf_counter()
    if not is_tree(T):
        raise NotATree("tree formula needs a tree")
    if T.n == 1:
        return DimensionReport(0, (), "formula", 0, (time.perf_counter() - t0) * 1e3)
    if is_path_graph(T):
        end = min(v for v in range(T.n) if T.degree(v) == 1)
        return DimensionReport(1, (end,), "formula", 0, (time.perf_counter() - t0) * 1e3)
    tm = tree_metrics(T)
    basis = standard_metric_basis(T)
    value = tm.n1 - tm.ex
    assert len(basis) == value
    return DimensionReport(value, basis, "formula", 0, (time.perf_counter() - t0) * 1e3)


def metric_dimension(G: Graph, method: str = "auto", limits: SearchLimits | None = None) -> DimensionReport:
    """Dispatch: ``auto`` uses the tree formula on trees and search otherwise."""
    if method == "tree-formula" or (method == "auto" and is_tree(G)):
        return tree_metric_dimension(G)
    if method in ("auto", "search"):
        return metric_dimension_exact(G, limits)
    raise ValueError(f"unknown method {method!r}")
