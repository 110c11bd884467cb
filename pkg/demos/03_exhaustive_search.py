"""dim_S and Dim_S by running through every function V(G) -> V(H)."""

import numpy as np

from sierpinski_dim import cycle_graph, path_graph, sierpinski_dims_exhaustive, star_graph

# 3^5 = 243 functions for C5 against the triangle
rep = sierpinski_dims_exhaustive(cycle_graph(5), cycle_graph(3))
print(rep.dim_s, rep.Dim_s, rep.functions_examined)
print(rep.argmin_f, rep.argmax_f)       # first minimiser / maximiser in counter order

# the distribution of dim over all functions
values = np.array(sorted(rep.histogram))
counts = np.array([rep.histogram[v] for v in values])
print(values, counts, counts.sum())
print(rep.histogram_csv())

# path x star: 4^3 functions
rep = sierpinski_dims_exhaustive(path_graph(3), star_graph(3))
print(rep.dim_s, rep.Dim_s)

# stop at the first function reaching a target value
early = sierpinski_dims_exhaustive(cycle_graph(6), cycle_graph(3), target_dim_s=2)
print(early.early_exit, early.functions_examined, early.argmin_f)

# worker count does not change the answer, only the wall clock
one = sierpinski_dims_exhaustive(cycle_graph(5), cycle_graph(3), workers=1).to_dict(timing=False)
two = sierpinski_dims_exhaustive(cycle_graph(5), cycle_graph(3), workers=2).to_dict(timing=False)
print(one == two)
