"""Every layer of a Sierpinski product is a convex subgraph."""

import random

from sierpinski_dim.convexity import is_convex_subgraph, verify_layer_convexity
from sierpinski_dim.families import cycle_graph, random_connected_graph
from sierpinski_dim.product import sierpinski_product

# the control: a 4-vertex arc of C6 is not convex, 0 and 3 have a geodesic through 4
print(is_convex_subgraph(cycle_graph(6), [0, 1, 2, 3]).to_dict())
print(is_convex_subgraph(cycle_graph(6), [0, 1, 2]).convex)

# random products, all layers checked
rng = random.Random(7)
bad = 0
for trial in range(200):
    G = random_connected_graph(rng.randint(1, 6), rng)
    H = random_connected_graph(rng.randint(1, 6), rng)
    f = tuple(rng.randrange(H.n) for _ in range(G.n))
    bad += sum(not r.convex for r in verify_layer_convexity(sierpinski_product(G, H, f)))
print("violations:", bad)
