import itertools

import pytest

from mapmatroid import is_isomorphic, map_info
from mapmatroid.enumeration import (automorphism_orbit_size,
                                    canonical_certificate, connected_count,
                                    enumerate_maps)

# Labelled connected rotation systems on n edges, computed independently via
# the product formula over edge partitions: t(n) = (2n)! splits as the sum of
# products of connected counts, giving 2, 20, 592, 33888.
CONNECTED_COUNTS = {1: 2, 2: 20, 3: 592, 4: 33888}

# Hand-verified isomorphism class counts: n=1 gives the single edge and the
# single loop; n=2 gives path, digon, loop-plus-edge, two-loop bouquet and
# the torus square.
CLASS_COUNTS = {1: 2, 2: 5}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_connected_counts(n):
    assert connected_count(n) == CONNECTED_COUNTS[n]


@pytest.mark.parametrize("n", [1, 2])
def test_class_counts(n):
    assert len(enumerate_maps(n)) == CLASS_COUNTS[n]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_orbit_counting_identity(n):
    """Sum of orbit sizes over the returned classes must equal the number of
    labelled connected rotation systems: the dedup is then exactly right."""
    total = 0
    for m in enumerate_maps(n):
        sigma = [0] * (2 * n)

        def enc(d):
            return 2 * (abs(d) - 1) + (0 if d > 0 else 1)

        for cyc in m.rotation:
            for j, d in enumerate(cyc):
                sigma[enc(d)] = enc(cyc[(j + 1) % len(cyc)])
        total += automorphism_orbit_size(tuple(sigma))
    assert total == CONNECTED_COUNTS[n]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumerated_maps_are_valid_and_distinct(n):
    maps_n = enumerate_maps(n)
    for m in maps_n:
        assert m.n == n
        assert m.mode == "orientable"
        assert map_info(m).euler_characteristic % 2 == 0
    for a, b in itertools.combinations(maps_n, 2):
        assert not is_isomorphic(a, b)


def test_enumeration_is_deterministic():
    assert enumerate_maps(2) == enumerate_maps(2)
    first = [m.rotation for m in enumerate_maps(3)]
    enumerate_maps.cache_clear()
    assert [m.rotation for m in enumerate_maps(3)] == first


def test_certificate_is_label_invariant():
    digon = (2, 3, 0, 1)            # two vertices joined by two edges
    dart_flipped = (3, 2, 1, 0)     # same map with edge 1's darts swapped
    assert canonical_certificate(digon) == canonical_certificate(dart_flipped)
