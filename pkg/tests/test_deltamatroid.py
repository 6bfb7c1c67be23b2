import itertools

import pytest

from mapmatroid import (BasisFamily, GroundSet, check_even,
                        check_symmetric_exchange, dual_map, enumerate_bases,
                        format_subset, greedy, map_independence_oracle,
                        parse_subset)
from mapmatroid.fixtures import fixture_names, load_fixture

EXPECTED_BASES = {
    "SPHERE_EDGE": {frozenset({1})},
    "SPHERE_LOOP": {frozenset({-1})},
    "TORUS_AB": {frozenset({1, 2}), frozenset({-1, -2})},
    "THETA": {frozenset({1, -2, -3}), frozenset({-1, 2, -3}), frozenset({-1, -2, 3})},
    "RP2_LOOP": {frozenset({1}), frozenset({-1})},
}


@pytest.mark.parametrize("name", sorted(EXPECTED_BASES))
def test_enumerate_bases(name):
    fam = enumerate_bases(load_fixture(name))
    assert fam.bases == EXPECTED_BASES[name]


def test_enumeration_limit():
    theta = load_fixture("THETA")
    with pytest.raises(ValueError, match="limit"):
        enumerate_bases(theta, limit=2)
    assert enumerate_bases(theta, limit=3) == enumerate_bases(theta)


def test_ground_set():
    g = GroundSet(3)
    assert g.elements() == (1, -1, 2, -2, 3, -3)
    assert g.star(2) == -2 and g.star(-2) == 2
    assert g.is_admissible({1, -2})
    assert not g.is_admissible({1, -1})
    assert not g.is_admissible({4})
    subsets = list(g.admissible_subsets(2))
    assert len(subsets) == 3 * 4  # C(3,2) index choices, 2^2 starrings
    assert len(set(subsets)) == len(subsets)


def test_exchange_axiom():
    ok, cert = check_symmetric_exchange(BasisFamily(2, [{1, 2}, {-1, -2}]))
    assert ok and cert is None
    ok, cert = check_symmetric_exchange(BasisFamily(3, [{1, 2, 3}, {-1, -2, -3}]))
    assert not ok
    a, b, k = cert
    assert (a, b, k) == (frozenset({1, 2, 3}), frozenset({-1, -2, -3}), 1)
    ok, _ = check_symmetric_exchange(BasisFamily(2, [{1, -2}]))
    assert ok


def test_evenness():
    assert check_even(BasisFamily(2, [{1, 2}, {-1, -2}]))
    assert not check_even(BasisFamily(1, [{1}, {-1}]))
    assert check_even(BasisFamily(3, [{1, -2, 3}]))


def test_greedy_examples(fixture_maps):
    ta = fixture_maps["TORUS_AB"]
    assert greedy(2, map_independence_oracle(ta), [1, 2]) == {1, 2}
    sl = fixture_maps["SPHERE_LOOP"]
    assert greedy(1, map_independence_oracle(sl), [1]) == {-1}
    th = fixture_maps["THETA"]
    assert greedy(3, map_independence_oracle(th), [2, 1, 3]) == {2, -1, -3}


@pytest.mark.parametrize("name", fixture_names())
def test_greedy_always_returns_a_basis(name):
    m = load_fixture(name)
    fam = enumerate_bases(m)
    oracle = map_independence_oracle(m)
    for order in itertools.permutations(range(1, m.n + 1)):
        assert fam.is_basis(greedy(m.n, oracle, order))


def test_greedy_errors():
    with pytest.raises(ValueError, match="permutation"):
        greedy(2, lambda s: True, [1, 1])
    with pytest.raises(ValueError, match="Lagrangian independence oracle"):
        greedy(1, lambda s: len(s) == 0, [1])


def test_is_basis(fixture_maps):
    fam = enumerate_bases(fixture_maps["TORUS_AB"])
    assert fam.is_basis({1, 2})
    assert not fam.is_basis({1, -2})
    assert not fam.is_basis({1, -1})
    assert not fam.is_basis({1})


@pytest.mark.parametrize("name", fixture_names())
def test_dual_bases_are_starred(name):
    m = load_fixture(name)
    assert enumerate_bases(dual_map(m)) == enumerate_bases(m).starred()


def test_family_text_format(fixture_maps):
    fam = enumerate_bases(fixture_maps["THETA"])
    text = fam.to_text()
    assert text == "1 2* 3*\n1* 2 3*\n1* 2* 3\n"
    assert BasisFamily.from_text(text) == fam
    assert parse_subset("1 2* 3*") == frozenset({1, -2, -3})
    assert format_subset({-3, 1, -2}) == "1 2* 3*"


def test_family_validation():
    with pytest.raises(ValueError, match="empty"):
        BasisFamily(2, [])
    with pytest.raises(ValueError, match="admissible"):
        BasisFamily(2, [{1, -1}])
    with pytest.raises(ValueError, match="admissible"):
        BasisFamily(2, [{1}])
