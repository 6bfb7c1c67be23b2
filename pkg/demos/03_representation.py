"""From surface cycles to an exact matrix whose minors know the bases.

Puncture the surface at every vertex, face centre and edge/coedge crossing;
what is left retracts onto the spine graph of the 4n barycentric triangles.
Each spine cycle crosses edges and coedges transversally, and its incidence
vector records the signed crossing counts in coordinates (1..n | 1*..n*).

Stacking a cycle basis and row reducing yields an n x 2n matrix over the
rationals: the rows span a Lagrangian subspace, and an admissible n-set of
columns is nonsingular exactly when it is a basis of the map.
"""

from mapmatroid import (RATIONALS, build_spine, cycle_basis, enumerate_bases,
                        format_subset, incidence_vector,
                        matroid_from_representation, pair_product,
                        representation, vertex_link_cycle)
from mapmatroid.fixtures import load_fixture

torus = load_fixture("TORUS_AB")
spine = build_spine(torus)
print(f"spine of the torus: {spine.num_nodes} triangles, {len(spine.arcs)} arcs")

cycles = cycle_basis(spine)
print(f"cycle basis size: {len(cycles)}  (always 2n + 1)")
vectors = [incidence_vector(spine, c) for c in cycles]
print("incidence vectors (coordinates 1 2 | 1* 2*):")
for vec in vectors:
    print("  ", vec)

print("pairwise hyperbolic products all vanish (isotropy):",
      all(pair_product(u, v) == 0 for u in vectors for v in vectors))

# Small circles around vertices pair to zero with everything as well.
link = incidence_vector(spine, vertex_link_cycle(spine, 0))
print("vertex link vector:", link,
      "| products:", [pair_product(link, v) for v in vectors])

rep = representation(torus, RATIONALS)
print("\ncanonical representation (rows reduced, columns 1 2 1* 2*):")
print(rep.matrix.to_text(), end="")
print("A * B^T skew symmetric?",
      rep.a.matmul(rep.b.transpose()).is_skew_symmetric())

# Nonsingular admissible column minors = bases of the map, on the nose.
print("\nbases from column minors:")
print(matroid_from_representation(rep).to_text(), end="")
print("bases from surface cutting:")
print(enumerate_bases(torus).to_text(), end="")

for subset in [{1, 2}, {1, -2}]:
    cols = sorted(rep.column_index(x) for x in subset)
    print(f"columns {format_subset(subset):6s} independent?",
          rep.matrix.columns_independent(cols))
