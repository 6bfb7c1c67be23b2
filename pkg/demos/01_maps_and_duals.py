"""A first tour: building maps, reading off their topology, dualizing.

A map is a graph drawn on a closed surface so every face is a disk.  We
describe one purely combinatorially: number the edges 1..n, give every edge
two darts i+ and i-, and list the counterclockwise order of darts around
each vertex.
"""

from mapmatroid import dual_map, format_map, is_isomorphic, map_info, parse_map

# The square torus: one vertex, two loops that interleave around it.
torus = parse_map("""
mode orientable
edges 2
vertex v1: 1+ 2+ 1- 2-
""")

info = map_info(torus)
print("torus:", info)
print("  Euler characteristic", info.euler_characteristic, "-> genus", info.genus)

# Same two loops, nested instead of interleaved: now they bound on a sphere.
bouquet = parse_map("""
mode orientable
edges 2
vertex v1: 1+ 1- 2+ 2-
""")
print("bouquet:", map_info(bouquet))
print("torus and bouquet isomorphic?", is_isomorphic(torus, bouquet))

# The theta graph on the sphere: two vertices, three parallel edges.
theta = parse_map("""
mode orientable
edges 3
vertex v1: 1+ 2+ 3+
vertex v2: 3- 2- 1-
""")
print("theta:", map_info(theta))

# The dual lives on the same surface: one vertex per face, edge i crossed
# by coedge i*.  Dualizing twice gives the original map back.
dual = dual_map(theta)
print("\ndual of theta:")
print(format_map(dual))
print("dual(dual(theta)) isomorphic to theta?",
      is_isomorphic(dual_map(dual), theta))
