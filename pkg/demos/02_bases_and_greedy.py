"""Cut sets, independence, the basis family, and the greedy algorithm.

A subset of edges and coedges (never both i and i*) is independent when
cutting the surface along all of them leaves it connected.  The maximal
independent sets, the bases, always have exactly n elements, and they
satisfy the symmetric exchange axiom: the family is a Lagrangian
delta-matroid.
"""

import itertools

from mapmatroid import (check_even, check_symmetric_exchange, cut_surface,
                        enumerate_bases, format_subset, greedy,
                        is_independent, map_independence_oracle,
                        spanning_tree_basis)
from mapmatroid.fixtures import load_fixture

theta = load_fixture("THETA")

print("independence on the theta graph (edges 1,2,3 between two vertices):")
for cut in [{1}, {1, 2}, {1, -2}, {1, -2, -3}]:
    verdict = "independent" if is_independent(theta, cut) else "disconnects"
    print(f"  cut {format_subset(cut):10s} -> {verdict}")

# {1,2} disconnects: the two edges together bound a circle on the sphere.
print("  cut surface for {1,2}:", cut_surface(theta, {1, 2}))

family = enumerate_bases(theta)
print("\nall bases of theta (tree + starred cotree patterns):")
print(family.to_text(), end="")

ok, certificate = check_symmetric_exchange(family)
print("symmetric exchange holds?", ok)
print("even (starred counts agree mod 2)?", check_even(family))

# The lowest-index spanning tree gives one basis directly.
print("spanning tree basis:", format_subset(spanning_tree_basis(theta)))

# The greedy algorithm scans the edge indices in any order, keeping the
# plain edge when the oracle allows it and starring it otherwise.  Whatever
# the order, the result is a basis.
oracle = map_independence_oracle(theta)
print("\ngreedy over every ordering of (1,2,3):")
for order in itertools.permutations((1, 2, 3)):
    basis = greedy(theta.n, oracle, order)
    assert family.is_basis(basis)
    print(f"  {order} -> {format_subset(basis)}")
