"""Undirected simple graphs on dense vertex ids, hop distances and tree structure.

Vertices are the integers ``0..n-1``. A :class:`Graph` is immutable once
built; its all-pairs distance matrix is computed on first request and then
cached.
"""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import NotATree, OutOfRange, ParseError, SelfLoop

# Larger than any real hop distance; sums of two still fit in int64.
UNREACHABLE = np.iinfo(np.int64).max // 4


class Graph:
    """Immutable undirected simple graph.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``.
    """

    __slots__ = ("n", "adj", "_edges", "_dist", "_lock")

    def __init__(self, n: int, adj: tuple[tuple[int, ...], ...]):
        self.n = n
        self.adj = adj
        self._edges = None
        self._dist = None
        self._lock = threading.Lock()

    def __getstate__(self):
        return (self.n, self.adj)

    def __setstate__(self, state):
        self.n, self.adj = state
        self._edges = None
        self._dist = None
        self._lock = threading.Lock()

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        if self._edges is None:
            self._edges = tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)
        return self._edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def dist(self) -> np.ndarray:
        return distance_matrix(self)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``0..n-1``; duplicate edges are collapsed."""
    if n < 0:
        raise OutOfRange(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def bfs_distances(G: Graph, source: int) -> list[int]:
    dist = [UNREACHABLE] * G.n
    dist[source] = 0
    queue = deque([source])
    adj = G.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return dist


def distance_matrix(G: Graph) -> np.ndarray:
    """All-pairs hop distances by one BFS per source, cached on ``G``.

    Unreachable pairs hold :data:`UNREACHABLE`. The returned array is
    read-only.
    """
    if G._dist is None:
        with G._lock:
            if G._dist is None:
                D = np.array([bfs_distances(G, s) for s in range(G.n)], dtype=np.int64)
                D = D.reshape(G.n, G.n)
                D.setflags(write=False)
                G._dist = D
    return G._dist


def is_connected(G: Graph) -> bool:
    if G.n <= 1:
        return True
    return UNREACHABLE not in bfs_distances(G, 0)


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.m == G.n - 1 and is_connected(G)


def is_path_graph(G: Graph) -> bool:
    return is_tree(G) and all(len(a) <= 2 for a in G.adj)


def path_endpoints(G: Graph) -> tuple[int, int]:
    """Endpoints of a path graph, smaller index first (``(0, 0)`` for K1)."""
    if not is_path_graph(G):
        raise NotATree("graph is not a path")
    if G.n == 1:
        return (0, 0)
    ends = [v for v in range(G.n) if len(G.adj[v]) == 1]
    return (ends[0], ends[1])


@dataclass(frozen=True)
class TreeMetrics:
    """Leaf / branch-vertex structure of a tree.

    A leaf is *owned* by the branch vertex it reaches first when walking
    inward through degree-2 vertices; in a path no leaf has an owner.
    """

    leaves: tuple[int, ...]
    branch_vertices: tuple[int, ...]
    exterior_branch: tuple[int, ...]
    terminal_degree: dict[int, int]
    terminal_leaf_owner: dict[int, int]
    terminal_leaves: dict[int, tuple[int, ...]] = field(default_factory=dict)

    @property
    def n1(self) -> int:
        return len(self.leaves)

    @property
    def ex(self) -> int:
        return len(self.exterior_branch)


def tree_metrics(T: Graph) -> TreeMetrics:
    if not is_tree(T):
        raise NotATree("tree_metrics needs a tree")
    adj = T.adj
    leaves = tuple(v for v in range(T.n) if len(adj[v]) == 1)
    branch = tuple(v for v in range(T.n) if len(adj[v]) >= 3)
    owner: dict[int, int] = {}
    for leaf in leaves:
        prev, cur = leaf, adj[leaf][0]
        while len(adj[cur]) == 2:
            a, b = adj[cur]
            prev, cur = cur, (b if a == prev else a)
        if len(adj[cur]) >= 3:
            owner[leaf] = cur
    by_branch: dict[int, list[int]] = {b: [] for b in branch}
    for leaf, b in owner.items():
        by_branch[b].append(leaf)
    terminal_leaves = {b: tuple(sorted(ls)) for b, ls in by_branch.items()}
    return TreeMetrics(
        leaves=leaves,
        branch_vertices=branch,
        exterior_branch=tuple(b for b in branch if terminal_leaves[b]),
        terminal_degree={b: len(ls) for b, ls in terminal_leaves.items()},
        terminal_leaf_owner=owner,
        terminal_leaves=terminal_leaves,
    )


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``vertices``; also returns the new-to-old id map."""
    order = sorted(set(vertices))
    index = {v: i for i, v in enumerate(order)}
    edges = [(index[u], index[v]) for u in order for v in G.adj[u] if v in index and u < v]
    return build_graph(len(order), edges), order


# --- text and DOT formats -------------------------------------------------


def parse_graph_text(text: str) -> Graph:
    """Parse the ``n m`` header followed by ``m`` lines of ``u v`` (0-based).

    Blank lines and ``#`` comments are ignored.
    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty graph file", 1)
    lineno, head = rows[0]
    if len(head) != 2:
        raise ParseError("header must be 'n m'", lineno)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header must hold two integers", lineno) from None
    if n < 0 or m < 0:
        raise ParseError("n and m must be non-negative", lineno)
    body = rows[1:]
    if len(body) != m:
        last = body[-1][0] if body else lineno
        raise ParseError(f"expected {m} edge lines, found {len(body)}", last)
    edges = []
    for lineno, parts in body:
        if len(parts) != 2:
            raise ParseError("edge line must be 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range [0, {n})", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v))
    return build_graph(n, edges)


def format_graph_text(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def to_dot(G: Graph, name: str = "G", labels: dict[int, str] | None = None) -> str:
    out = [f"graph {name} {{"]
    for v in range(G.n):
        if labels and v in labels:
            out.append(f'  {v} [label="{labels[v]}"];')
        else:
            out.append(f"  {v};")
    out.extend(f"  {u} -- {v};" for u, v in G.edges)
    out.append("}")
    return "\n".join(out) + "\n"
