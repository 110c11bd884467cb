"""Named graph families and tree enumeration."""

from __future__ import annotations

import random
from typing import Iterator

from .errors import OutOfRange
from .graph import Graph, build_graph, is_connected


def path_graph(n: int) -> Graph:
    if n < 1:
        raise OutOfRange("path needs at least one vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """C_n with vertex i adjacent to i-1 and i+1 (mod n)."""
    if n < 3:
        raise OutOfRange("cycle needs at least three vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(k: int) -> Graph:
    """K_{1,k}: centre 0, leaves 1..k."""
    if k < 1:
        raise OutOfRange("star needs at least one leaf")
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise OutOfRange("complete graph needs at least one vertex")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def fk_graph(k: int) -> Graph:
    """The 3k-vertex graph built on a 2k-cycle v_0..v_{2k-1}.

    For each 0 <= i < k a vertex u_{2i} is joined to v_{2i-1} and v_{2i}
    (indices mod 2k). Numbering: v_j -> j and u_{2i} -> 2k + i.
    """
    if k < 3:
        raise OutOfRange("F_k is defined for k >= 3")
    m = 2 * k
    edges = [(j, (j + 1) % m) for j in range(m)]
    for i in range(k):
        u = m + i
        edges.append((u, (2 * i - 1) % m))
        edges.append((u, 2 * i))
    return build_graph(3 * k, edges)


def fk_u(k: int, index: int) -> int:
    """Vertex id of u_index in ``fk_graph(k)``; ``index`` must be even."""
    if index % 2 or not 0 <= index < 2 * k:
        raise OutOfRange(f"u_{index} does not exist in F_{k}")
    return 2 * k + index // 2


def double_spider() -> Graph:
    """Centres 0 and 1 joined by an edge; leaves 2,3 on 0 and 4,5 on 1."""
    return build_graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])


def spider(legs: list[int]) -> Graph:
    """A centre (vertex 0) with one pendant path per entry of ``legs``."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt, edges)


# --- trees ----------------------------------------------------------------


def tree_from_prufer(seq: list[int]) -> Graph:
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return build_graph(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    return tree_from_prufer([rng.randrange(n) for _ in range(n - 2)])


def tree_centers(T: Graph) -> list[int]:
    degree = T.degrees()
    remaining = T.n
    layer = [v for v in range(T.n) if degree[v] <= 1]
    removed = [False] * T.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            removed[v] = True
            for w in T.adj[v]:
                if not removed[w]:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(v for v in range(T.n) if not removed[v])


def _rooted_code(T: Graph, root: int) -> str:
    def code(v: int, parent: int) -> str:
        return "(" + "".join(sorted(code(w, v) for w in T.adj[v] if w != parent)) + ")"

    return code(root, -1)


def tree_canonical_code(T: Graph) -> str:
    """Isomorphism-invariant string of a tree (rooted encoding at its centre)."""
    return min(_rooted_code(T, c) for c in tree_centers(T))


def nonisomorphic_trees(n: int) -> list[Graph]:
    """One representative per isomorphism class of trees on ``n`` vertices.

    Built by leaf extension from the classes on ``n - 1`` vertices;
    the output order is deterministic.
    """
    if n < 1:
        return []
    level = [build_graph(1, [])]
    for size in range(2, n + 1):
        seen: set[str] = set()
        nxt = []
        for T in level:
            for v in range(T.n):
                U = build_graph(size, list(T.edges) + [(v, size - 1)])
                c = tree_canonical_code(U)
                if c not in seen:
                    seen.add(c)
                    nxt.append(U)
        level = nxt
    return level


def iter_trees(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from nonisomorphic_trees(n)


def random_connected_graph(n: int, rng: random.Random, p: float = 0.4) -> Graph:
    """A random spanning tree plus each remaining pair with probability ``p``."""
    base = random_tree(n, rng)
    edges = set(base.edges)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    G = build_graph(n, sorted(edges))
    assert is_connected(G)
    return G
