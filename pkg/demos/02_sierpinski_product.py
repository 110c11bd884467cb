"""Building a Sierpinski product and poking at its layers."""

from sierpinski_dim import are_isomorphic, cycle_graph, fk_graph
from sierpinski_dim.product import (
    cycle_triangle_function,
    display_function,
    layer_vertices,
    sierpinski_product,
)

# C5 (x)_f C3 with the cycle-triangle function
f = cycle_triangle_function(5)
print(display_function(f))              # 1-based, as printed by the CLI

P = sierpinski_product(cycle_graph(5), cycle_graph(3), f)
print(P.graph.n, P.graph.m)             # 15 vertices, 5 triangles + 5 connecting edges

# vertex (g, h) lives at index g * nH + h
print(P.encode(2, 1), P.decode(7))
print(layer_vertices(P, 3))

# each connecting edge joins (g, f(g')) to (g', f(g))
for (g, g2), (u, v) in P.connecting_edges:
    print((g, g2), P.decode(u), P.decode(v))

# with this f the product is the graph F_5
print(are_isomorphic(P.graph, fk_graph(5)))

# DOT with one cluster per layer; pipe into `dot -Tsvg`
print(P.to_dot()[:200], "...")
