"""Convexity of vertex subsets, and the layer check for Sierpinski products.

``S`` is convex in ``G`` when no vertex outside ``S`` lies on a shortest
path between two vertices of ``S``, i.e. ``d(u,w) + d(w,v) > d(u,v)`` for
all ``u, v`` in ``S`` and ``w`` outside.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import Disconnected, InducedDisconnected
from .graph import Graph, distance_matrix, induced_subgraph, is_connected
from .product import SierpinskiProduct, layer_vertices


@dataclass(frozen=True)
class ConvexityReport:
    graph_id: str
    subgraph: tuple[int, ...]
    convex: bool
    violation: tuple[int, int, int] | None = None
    isometric: bool = True

    def to_dict(self) -> dict:
        return {
            "graph": self.graph_id,
            "subgraph": list(self.subgraph),
            "convex": self.convex,
            "isometric": self.isometric,
            "violation": list(self.violation) if self.violation else None,
        }


def is_convex_subgraph(G: Graph, S: Iterable[int], graph_id: str = "G") -> ConvexityReport:
    """Midpoint test over all ``(u, v, w)``; reports the lexicographically first violation.

    A convex set is automatically connected and isometric (every geodesic
    between its members stays inside), so the induced subgraph is only
    built when a violation turns up.
    """
    if not is_connected(G):
        raise Disconnected("host graph must be connected")
    S = tuple(sorted(set(S)))
    D = distance_matrix(G)
    inside = np.zeros(G.n, bool)
    inside[list(S)] = True
    W = np.flatnonzero(~inside)
    Sa = np.array(S, dtype=np.intp)
    DS = D[np.ix_(Sa, Sa)]

    violation = None
    if W.size:
        # through[i, j, k] = d(S_i, W_k) + d(W_k, S_j)
        DW = D[np.ix_(Sa, W)]
        through = DW[:, None, :] + DW[None, :, :]
        on_path = through == DS[:, :, None]
        on_path &= np.triu(np.ones((len(S), len(S)), bool), k=1)[:, :, None]
        hits = np.argwhere(on_path)
        if hits.size:
            i, j, k = hits[0]  # argwhere is row-major, hence lexicographic
            violation = (S[i], S[j], int(W[k]))
    if violation is None:
        return ConvexityReport(graph_id, S, True, None, True)

    sub, _ = induced_subgraph(G, S)
    if not is_connected(sub):
        raise InducedDisconnected("subgraph induced on S is disconnected")
    isometric = bool(np.array_equal(distance_matrix(sub), DS))
    return ConvexityReport(graph_id, S, False, violation, isometric)


def verify_layer_convexity(P: SierpinskiProduct, graph_id: str = "product") -> list[ConvexityReport]:
    """One report per vertex g of the first factor, for the layer gH."""
    return [
        is_convex_subgraph(P.graph, layer_vertices(P, g), f"{graph_id}/layer{g}")
        for g in range(P.nG)
    ]
