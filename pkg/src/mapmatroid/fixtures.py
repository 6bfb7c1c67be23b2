"""The small map corpus shipped with the package."""

from __future__ import annotations

from .maps import CombinatorialMap, parse_map

FIXTURES: dict[str, str] = {
    "SPHERE_EDGE": (
        "# one edge joining two vertices on the sphere\n"
        "mode orientable\n"
        "edges 1\n"
        "vertex v1: 1+\n"
        "vertex v2: 1-\n"
    ),
    "SPHERE_LOOP": (
        "# one loop on the sphere, bounding two faces\n"
        "mode orientable\n"
        "edges 1\n"
        "vertex v1: 1+ 1-\n"
    ),
    "TORUS_AB": (
        "# the square torus: two loops meeting in one vertex, one face\n"
        "mode orientable\n"
        "edges 2\n"
        "vertex v1: 1+ 2+ 1- 2-\n"
    ),
    "THETA": (
        "# theta graph on the sphere: two vertices, three parallel edges\n"
        "mode orientable\n"
        "edges 3\n"
        "vertex v1: 1+ 2+ 3+\n"
        "vertex v2: 3- 2- 1-\n"
    ),
    "RP2_LOOP": (
        "# one one-sided loop on the projective plane\n"
        "mode signed\n"
        "edges 1\n"
        "vertex v1: 1+ 1-\n"
        "sign 1 -\n"
    ),
}


def fixture_names() -> list[str]:
    return sorted(FIXTURES)


def fixture_text(name: str) -> str:
    return FIXTURES[name]


def load_fixture(name: str) -> CombinatorialMap:
    return parse_map(FIXTURES[name])
