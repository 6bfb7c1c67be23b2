"""Non-orientable surfaces: signed rotation systems and GF(2) coefficients.

A per-edge sign of -1 marks an edge whose ribbon carries a half twist.
Crossing counts are then only meaningful modulo 2, so the representation is
taken over GF(2).  The basis family is still a Lagrangian delta-matroid,
but evenness can fail: the projective plane is the smallest witness.
"""

from mapmatroid import (GF2, check_even, check_symmetric_exchange,
                        enumerate_bases, map_info,
                        matroid_from_representation, parse_map,
                        representation)
from mapmatroid.fixtures import load_fixture

rp2 = load_fixture("RP2_LOOP")
print("projective plane loop:", map_info(rp2))

family = enumerate_bases(rp2)
print("bases:")
print(family.to_text(), end="")
ok, _ = check_symmetric_exchange(family)
print("symmetric exchange holds?", ok)
print("even?", check_even(family), " (one basis has a star, the other none)")

rep = representation(rp2, GF2)
print("GF(2) representation:", rep.matrix.entries)
print("column minors agree with surface cutting?",
      matroid_from_representation(rep) == family)

# The diagonal of A * B^T over GF(2) is exactly the evenness obstruction.
product = rep.a.matmul(rep.b.transpose())
print("A * B^T =", product.entries, "-> alternating?", product.is_skew_symmetric())

# A Klein bottle: even Euler characteristic, still non-orientable.
klein = parse_map("""
mode signed
edges 2
vertex v1: 1+ 2+ 1- 2-
sign 1 -
""")
print("\nklein bottle:", map_info(klein))
kfam = enumerate_bases(klein)
print("bases:")
print(kfam.to_text(), end="")
print("even?", check_even(kfam))
print("minors over GF(2) agree?",
      matroid_from_representation(representation(klein, GF2)) == kfam)
