"""Closed forms for tree factors and for cycles against a triangle,
checked against enumeration on small cases."""

from sierpinski_dim import (
    cycle_graph,
    double_spider,
    nonisomorphic_trees,
    path_graph,
    sierpinski_dims_exhaustive,
    sierpinski_dims_formula,
    star_graph,
)
from sierpinski_dim.graph import is_path_graph
from sierpinski_dim.search import (
    path_tree_formula,
    product_dimension,
    tree_lower_bound,
    tree_upper_formula,
)
from sierpinski_dim.product import path_tree_witness_function

# Dim_S(T1, T2) = n(T1) * dim(T2)
T1, T2 = path_graph(3), double_spider()
print(tree_upper_formula(T1, T2), sierpinski_dims_exhaustive(T1, T2).Dim_s)

# dim_S(P_n, T2) = n (dim(T2) - 2) + 2, attained by a mod-4 pattern
for n in range(2, 5):
    f = path_tree_witness_function(n, T2)
    print(n, path_tree_formula(n, T2), product_dimension(path_graph(n), T2, f), f)

# lower bound vs the true minimum on every non-path tree with 5 vertices
for T in nonisomorphic_trees(5):
    if is_path_graph(T):
        continue
    rep = sierpinski_dims_exhaustive(star_graph(3), T)
    print(T.edges, tree_lower_bound(star_graph(3), T), rep.dim_s, rep.Dim_s)

# cycles against a triangle: (2, n) with no enumeration at all
print(sierpinski_dims_formula(cycle_graph(12), cycle_graph(3)).to_dict(timing=False))
