import pytest

from mapmatroid.enumeration import enumerate_maps
from mapmatroid.fixtures import fixture_names, load_fixture


@pytest.fixture(scope="session")
def fixture_maps():
    return {name: load_fixture(name) for name in fixture_names()}


@pytest.fixture(scope="session")
def orientable_fixture_maps(fixture_maps):
    return {k: m for k, m in fixture_maps.items() if m.mode == "orientable"}


@pytest.fixture(scope="session")
def acceptance_corpus(fixture_maps):
    """The five shipped fixtures plus every connected orientable map with
    up to four edges, one per isomorphism class."""
    maps = list(fixture_maps.values())
    for n in range(1, 5):
        maps.extend(enumerate_maps(n))
    return maps
