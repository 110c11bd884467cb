"""Resolving sets and metric dimension on a few small graphs."""

import numpy as np

from sierpinski_dim import (
    cycle_graph,
    distance_matrix,
    fk_graph,
    fk_u,
    is_resolving_set,
    metric_dimension_exact,
    metric_representation,
    star_graph,
    tree_metric_dimension,
)

# distances in C6, one BFS per source
C6 = cycle_graph(6)
D = distance_matrix(C6)
print(D)

# one landmark cannot separate the two sides of a cycle
print(is_resolving_set(C6, [0]))        # False: 1 and 5 both sit at distance 1
print(is_resolving_set(C6, [0, 1]))     # True

# representation vectors: every row is distinct once S resolves
rep = metric_representation(C6, (0, 1))
print(rep.vectors)
print(len(np.unique(rep.vectors, axis=0)) == C6.n)

# exact search returns the lexicographically first basis
print(metric_dimension_exact(C6))

# trees have a closed form: leaves minus exterior branch vertices
S4 = star_graph(4)
print(tree_metric_dimension(S4).value, metric_dimension_exact(S4).value)

# F_k: a 2k-cycle with k pendant triangles; two landmarks always suffice
for k in range(3, 7):
    F = fk_graph(k)
    S = (fk_u(k, 0), fk_u(k, 2 * ((k + 1) // 2 - 1)))
    print(k, metric_dimension_exact(F).value, is_resolving_set(F, S))
