"""Sierpinski products G (x)_f H and the vertex functions used to build them.

Vertex ``(g, h)`` of the product is encoded as ``g * n(H) + h``. A vertex
function is a tuple ``f`` with ``f[g]`` an H-vertex; no adjacency
constraint is placed on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import FunctionShapeMismatch, IsAPath, NotATree, OutOfRange, WrongFactors
from .graph import Graph, build_graph, is_path_graph, is_tree, tree_metrics

VertexFunction = tuple[int, ...]


def check_function(f: Sequence[int], nG: int, nH: int) -> VertexFunction:
    f = tuple(int(x) for x in f)
    if len(f) != nG:
        raise FunctionShapeMismatch(f"function has {len(f)} entries, first factor has {nG} vertices")
    for g, h in enumerate(f):
        if not 0 <= h < nH:
            raise FunctionShapeMismatch(f"f({g}) = {h} is not a vertex of the second factor")
    return f


@dataclass(frozen=True)
class SierpinskiProduct:
    graph: Graph
    G: Graph
    H: Graph
    f: VertexFunction
    # ((g, g'), (u, v)): G-edge g<g' and its connecting edge u=(g,f(g')), v=(g',f(g))
    connecting_edges: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    @property
    def nG(self) -> int:
        return self.G.n

    @property
    def nH(self) -> int:
        return self.H.n

    def encode(self, g: int, h: int) -> int:
        return g * self.H.n + h

    def decode(self, v: int) -> tuple[int, int]:
        return divmod(v, self.H.n)

    def to_dict(self) -> dict:
        return {
            "index_base": 1,
            "nG": self.nG,
            "nH": self.nH,
            "f": [h + 1 for h in self.f],
            "n": self.graph.n,
            "m": self.graph.m,
            "edges": [[u, v] for u, v in self.graph.edges],
            "connecting_edges": [
                {"g_edge": list(ge), "edge": list(e)} for ge, e in self.connecting_edges
            ],
        }

    def to_dot(self, name: str = "P") -> str:
        """DOT text with one cluster per layer; labels are 1-based ``g,h``."""
        out = [f"graph {name} {{"]
        for g in range(self.nG):
            out.append(f"  subgraph cluster_{g} {{")
            out.append(f'    label="layer {g + 1}";')
            for h in range(self.nH):
                out.append(f'    {self.encode(g, h)} [label="{g + 1},{h + 1}"];')
            out.append("  }")
        for u, v in self.graph.edges:
            style = ' [style=bold]' if u // self.nH != v // self.nH else ""
            out.append(f"  {u} -- {v}{style};")
        out.append("}")
        return "\n".join(out) + "\n"


def sierpinski_product(G: Graph, H: Graph, f: Sequence[int]) -> SierpinskiProduct:
    f = check_function(f, G.n, H.n)
    nH = H.n
    edges = [(g * nH + a, g * nH + b) for g in range(G.n) for a, b in H.edges]
    connecting = []
    for g, g2 in G.edges:
        u, v = g * nH + f[g2], g2 * nH + f[g]
        edges.append((u, v))
        connecting.append(((g, g2), (u, v)))
    return SierpinskiProduct(build_graph(G.n * nH, edges), G, H, f, tuple(connecting))


def product_graph(G: Graph, H: Graph, f: Sequence[int]) -> Graph:
    """Just the product graph; skips the validation and bookkeeping."""
    nH = H.n
    nbrs = [[g * nH + w for w in H.adj[h]] for g in range(G.n) for h in range(nH)]
    for g, g2 in G.edges:
        u, v = g * nH + f[g2], g2 * nH + f[g]
        nbrs[u].append(v)
        nbrs[v].append(u)
    return Graph(G.n * nH, tuple(tuple(sorted(a)) for a in nbrs))


def layer_vertices(P: SierpinskiProduct, g: int) -> tuple[int, ...]:
    if not 0 <= g < P.nG:
        raise OutOfRange(f"{g} is not a vertex of the first factor")
    return tuple(range(g * P.nH, (g + 1) * P.nH))


# --- vertex functions -----------------------------------------------------


def constant_function(G: Graph, w: int, H: Graph) -> VertexFunction:
    if not 0 <= w < H.n:
        raise OutOfRange(f"{w} is not a vertex of H")
    return (w,) * G.n


def path_mod4_function(n: int, a: int, b: int) -> VertexFunction:
    """Entry i (1-based) is ``a`` when i mod 4 is 1 or 2, else ``b``."""
    if n < 1:
        raise OutOfRange("path length must be positive")
    return tuple(a if i % 4 in (1, 2) else b for i in range(1, n + 1))


def path_tree_leaves(T: Graph) -> tuple[int, int]:
    """The two leaves fed to the mod-4 function for a non-path tree.

    With two or more exterior branch vertices of terminal degree >= 2, take
    the smallest terminal leaf of each of the first two such vertices;
    otherwise the two smallest leaves of the single branch vertex.
    """
    if not is_tree(T):
        raise NotATree("second factor must be a tree")
    if is_path_graph(T):
        raise IsAPath("second factor must not be a path")
    tm = tree_metrics(T)
    rich = [b for b in tm.exterior_branch if tm.terminal_degree[b] >= 2]
    if len(rich) >= 2:
        return tm.terminal_leaves[rich[0]][0], tm.terminal_leaves[rich[1]][0]
    leaves = tm.terminal_leaves[rich[0]]
    return leaves[0], leaves[1]


def path_tree_witness_function(n: int, T2: Graph) -> VertexFunction:
    if n < 2:
        raise OutOfRange("path factor needs at least two vertices")
    u1, u2 = path_tree_leaves(T2)
    return path_mod4_function(n, u1, u2)


_B = (2, 0, 1, 2)  # 3,1,2,3 in 1-based labels
_C = (1, 1, 2, 2)  # 2,2,3,3


def cycle_triangle_function(n: int) -> VertexFunction:
    """The function on C_n -> C_3 whose product is F_n (0-based values)."""
    if n < 3:
        raise OutOfRange("cycle length must be at least 3")
    if n == 3:
        return (0, 1, 2)
    if n == 4:
        return (0, 0, 1, 1)
    k, r = divmod(n - 4, 4)
    if r == 1:
        f = (0, 1, 2) + _B * k + (2, 0)
    elif r == 3:
        f = (0, 1, 2) + _B * (k + 1)
    elif r == 0:
        f = (0, 0) + _C * k + (1, 1)
    else:
        f = (0, 0) + _C * (k + 1)
    assert len(f) == n
    return f


def display_function(f: Sequence[int]) -> tuple[int, ...]:
    """1-based rendering of a vertex function."""
    return tuple(h + 1 for h in f)


# --- the Z set for C_n x C_3 ----------------------------------------------


def _is_natural_cycle(G: Graph) -> bool:
    n = G.n
    return n >= 3 and G.m == n and all(set(G.adj[i]) == {(i - 1) % n, (i + 1) % n} for i in range(n))


def _is_triangle(H: Graph) -> bool:
    return H.n == 3 and H.m == 3


def connecting_pair(P: SierpinskiProduct, i: int) -> tuple[int, int]:
    """``(x_i, y_i)`` of layer ``i`` of a product over a cycle.

    ``x_i`` meets the next layer, ``y_i`` the previous one (mod n).
    """
    n, f = P.nG, P.f
    return P.encode(i, f[(i + 1) % n]), P.encode(i, f[(i - 1) % n])


def z_resolving_set(P: SierpinskiProduct) -> tuple[int, ...]:
    """One vertex per layer: ``y_i`` when ``x_i != y_i``, else the smallest other vertex."""
    if not (_is_natural_cycle(P.G) and _is_triangle(P.H)):
        raise WrongFactors("Z set is defined for C_n (natural order) times C_3")
    Z = []
    for i in range(P.nG):
        x, y = connecting_pair(P, i)
        if x != y:
            Z.append(y)
        else:
            Z.append(min(v for v in layer_vertices(P, i) if v != x))
    return tuple(Z)

