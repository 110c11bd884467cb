"""Small-graph isomorphism by colour refinement with individualisation.

Both graphs are refined together as one disjoint union so that colours are
comparable across them. When refinement stalls, a vertex of the first graph
is individualised and matched in turn against every same-coloured vertex of
the second. Fine for the few-dozen-vertex graphs used here.
"""

from __future__ import annotations

from .graph import Graph


def _refine(adj: list[list[int]], colors: list[int]) -> list[int]:
    count = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [palette[s] for s in sigs]
        if len(palette) == count:
            return colors
        count = len(palette)


def _balanced(colors: list[int], n1: int) -> bool:
    return sorted(colors[:n1]) == sorted(colors[n1:])


def find_isomorphism(G1: Graph, G2: Graph) -> list[int] | None:
    """A bijection ``phi`` with ``uv in E(G1) <=> phi[u]phi[v] in E(G2)``, or None."""
    if G1.n != G2.n or G1.m != G2.m or sorted(G1.degrees()) != sorted(G2.degrees()):
        return None
    n = G1.n
    adj = [list(a) for a in G1.adj] + [[w + n for w in a] for a in G2.adj]
    edges2 = set(G2.edges)

    def search(colors: list[int]) -> list[int] | None:
        colors = _refine(adj, colors)
        if not _balanced(colors, n):
            return None
        classes: dict[int, list[int]] = {}
        for v in range(2 * n):
            classes.setdefault(colors[v], []).append(v)
        open_classes = [c for c in classes.values() if len(c) > 2]
        if not open_classes:
            phi = [0] * n
            for members in classes.values():
                a, b = members
                phi[a] = b - n
            ok = all(tuple(sorted((phi[u], phi[v]))) in edges2 for u, v in G1.edges)
            return phi if ok else None
        cell = min(open_classes, key=lambda c: (len(c), c[0]))
        v = cell[0]
        fresh = max(colors) + 1
        for w in (x for x in cell if x >= n):
            trial = list(colors)
            trial[v] = fresh
            trial[w] = fresh
            phi = search(trial)
            if phi is not None:
                return phi
        return None

    if n == 0:
        return []
    return search([0] * (2 * n))


def are_isomorphic(G1: Graph, G2: Graph) -> bool:
    return find_isomorphism(G1, G2) is not None
