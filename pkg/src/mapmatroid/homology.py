"""Incidence vectors of surface cycles and the exact row representation of a
map's basis family.

The spine graph is the adjacency graph of the 4n barycentric triangles; it is
a deformation retract of the surface punctured at every vertex, face centre
and edge/coedge crossing point.  A cycle in the spine therefore crosses edges
and coedges transversally, and its incidence vector lists those signed
crossing counts in the 2n coordinates (1..n | 1*..n*).

Sign conventions (orientable mode), fixed once and used everywhere:

* vertex rotations are read counterclockwise, edge i points along dart +i;
* each coedge i* is oriented so that it crosses edge i from right to left,
  i.e. the crossing pair (edge direction, coedge direction) is a positively
  oriented frame;
* a cycle crossing an edge or coedge from its left side to its right side
  picks up +1 in that coordinate, -1 the other way.

Concretely, per arc of the spine: traversing the half-edge arc of dart d from
the side-1 flag to the side-0 flag contributes sign(d) to coordinate |d|, and
traversing the half-coedge arc from flag (d, 1) to flag (-d, 0) contributes
sign(d) to coordinate |d|*.  Diagonal arcs cross nothing.  Flipping either
global choice would negate columns without changing any basis family.

For signed-mode maps the same structure is used with all coefficients read
modulo 2, which is why only the GF(2) representation is available there.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .deltamatroid import BasisFamily, GroundSet
from .linalg import GF2, RATIONALS, ExactMatrix
from .maps import (DIAGONAL, HALF_COEDGE, HALF_EDGE, ORIENTABLE,
                   CombinatorialMap)


@dataclass(frozen=True)
class SpineArc:
    """A flag adjacency with its crossing contribution.

    ``coord`` indexes the 2n ground coordinates (0..n-1 edges, n..2n-1
    coedges) and ``sign`` is the value picked up when traversing u -> v;
    diagonal arcs carry coord None.
    """

    index: int
    u: int
    v: int
    kind: str
    edge: int | None
    coord: int | None
    sign: int


class SpineGraph:
    def __init__(self, m: CombinatorialMap):
        self.map = m
        self.n = m.n
        self.num_nodes = m.num_flags
        arcs = []
        for a in m.flag_arcs:
            dart = m.flag_dart(a.u)
            if a.kind == HALF_EDGE:
                coord, sign = abs(dart) - 1, (1 if dart > 0 else -1)
            elif a.kind == HALF_COEDGE:
                coord = m.n + abs(dart) - 1
                sign = (1 if dart > 0 else -1) if m.sign(a.edge) == 1 else 1
            else:
                coord, sign = None, 0
            arcs.append(SpineArc(a.index, a.u, a.v, a.kind, a.edge, coord, sign))
        self.arcs: tuple[SpineArc, ...] = tuple(arcs)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int, int], ...], ...]:
        """Per node: (arc index, direction, neighbour), in arc order."""
        adj: list[list[tuple[int, int, int]]] = [[] for _ in range(self.num_nodes)]
        for a in self.arcs:
            adj[a.u].append((a.index, 1, a.v))
            adj[a.v].append((a.index, -1, a.u))
        return tuple(tuple(x) for x in adj)

    @cached_property
    def _arc_by_step(self) -> dict[tuple[str, int, int], tuple[int, int]]:
        table = {}
        for a in self.arcs:
            table[(a.kind, a.u, a.v)] = (a.index, 1)
            table[(a.kind, a.v, a.u)] = (a.index, -1)
        return table

    def step(self, kind: str, u: int, v: int) -> tuple[int, int]:
        return self._arc_by_step[(kind, u, v)]


@dataclass(frozen=True)
class Cycle:
    """A closed walk in the spine, as directed arc steps."""

    start: int
    steps: tuple[tuple[int, int], ...]

    def flags(self, spine: SpineGraph) -> tuple[int, ...]:
        out = [self.start]
        for arc_idx, direction in self.steps:
            a = spine.arcs[arc_idx]
            tail, head = (a.u, a.v) if direction == 1 else (a.v, a.u)
            if tail != out[-1]:
                raise ValueError("walk steps do not chain")
            out.append(head)
        if out[-1] != self.start:
            raise ValueError("walk does not close")
        return tuple(out)


def build_spine(m: CombinatorialMap) -> SpineGraph:
    return SpineGraph(m)


def cycle_basis(spine: SpineGraph) -> list[Cycle]:
    """Fundamental cycles of a breadth-first spanning tree rooted at flag 0;
    always 2n + 1 of them, in the order of their defining non-tree arcs."""
    parent: list[tuple[int, int, int] | None] = [None] * spine.num_nodes
    seen = [False] * spine.num_nodes
    seen[0] = True
    queue = [0]
    tree_arcs = set()
    while queue:
        nxt = []
        for node in queue:
            for arc_idx, direction, other in spine.adjacency[node]:
                if not seen[other]:
                    seen[other] = True
                    parent[other] = (node, arc_idx, direction)
                    tree_arcs.add(arc_idx)
                    nxt.append(other)
        queue = nxt

    def ascent(node: int) -> tuple[list[int], list[tuple[int, int]]]:
        nodes, steps = [node], []
        while parent[node] is not None:
            up, arc_idx, direction = parent[node]
            steps.append((arc_idx, -direction))
            node = up
            nodes.append(node)
        return nodes, steps

    cycles = []
    for a in spine.arcs:
        if a.index in tree_arcs:
            continue
        nodes_u, steps_u = ascent(a.u)
        nodes_v, steps_v = ascent(a.v)
        anc_u = {node: k for k, node in enumerate(nodes_u)}
        j = next(k for k, node in enumerate(nodes_v) if node in anc_u)
        meet = anc_u[nodes_v[j]]
        down_u = [(arc_idx, -direction) for arc_idx, direction in reversed(steps_u[:meet])]
        cycles.append(Cycle(a.u, ((a.index, 1),) + tuple(steps_v[:j]) + tuple(down_u)))
    return cycles


def incidence_vector(spine: SpineGraph, cycle: Cycle) -> tuple[int, ...]:
    """Signed crossing counts of the cycle with every edge and coedge."""
    cycle.flags(spine)
    vec = [0] * (2 * spine.n)
    for arc_idx, direction in cycle.steps:
        a = spine.arcs[arc_idx]
        if a.coord is not None:
            vec[a.coord] += direction * a.sign
    return tuple(vec)


def pair_product(u, v, field: str = RATIONALS):
    """The hyperbolic pairing: sum of u_i v_i* + u_i* v_i."""
    if len(u) != len(v) or len(u) % 2:
        raise ValueError("size mismatch")
    n = len(u) // 2
    total = sum(u[i] * v[n + i] + u[n + i] * v[i] for i in range(n))
    return total % 2 if field == GF2 else total


# -- link cycles ------------------------------------------------------------


def vertex_link_cycle(spine: SpineGraph, vertex: int) -> Cycle:
    """Small cycle around a vertex, crossing each incident half-edge once."""
    m = spine.map
    cyc = m.rotation[vertex]
    steps = []
    for d in cyc:
        steps.append(spine.step(HALF_EDGE, m.flag_index(d, 0), m.flag_index(d, 1)))
        steps.append(spine.step(DIAGONAL, m.flag_index(d, 1),
                                m.flag_index(m.sigma[d], 0)))
    return Cycle(m.flag_index(cyc[0], 0), tuple(steps))


def covertex_link_cycle(spine: SpineGraph, face: int) -> Cycle:
    """Small cycle around a face centre, crossing each incident half-coedge."""
    m = spine.map
    start = min(f for f in range(m.num_flags) if m._face_of[f] == face)
    steps = []
    cur = start
    while True:
        nxt = m._s0[cur]
        steps.append(spine.step(HALF_COEDGE, cur, nxt))
        cur = nxt
        nxt = m._s1[cur]
        steps.append(spine.step(DIAGONAL, cur, nxt))
        cur = nxt
        if cur == start:
            break
    return Cycle(start, tuple(steps))


def crossing_link_cycle(spine: SpineGraph, edge: int) -> Cycle:
    """Small cycle around the crossing point of an untwisted edge and its
    coedge; its incidence vector vanishes by cancellation."""
    m = spine.map
    if m.sign(edge) != 1:
        raise ValueError("crossing link requires an untwisted edge")
    i = edge
    path = [(HALF_COEDGE, m.flag_index(i, 1), m.flag_index(-i, 0)),
            (HALF_EDGE, m.flag_index(-i, 0), m.flag_index(-i, 1)),
            (HALF_COEDGE, m.flag_index(-i, 1), m.flag_index(i, 0)),
            (HALF_EDGE, m.flag_index(i, 0), m.flag_index(i, 1))]
    return Cycle(m.flag_index(i, 1), tuple(spine.step(*s) for s in path))


# -- the representation ------------------------------------------------------


@dataclass(frozen=True)
class Representation:
    """Canonical exact matrix whose row space is spanned by the incidence
    vectors of all cycles; columns are ordered (1..n | 1*..n*)."""

    n: int
    field: str
    matrix: ExactMatrix

    @property
    def a(self) -> ExactMatrix:
        return self.matrix.column_submatrix(range(self.n))

    @property
    def b(self) -> ExactMatrix:
        return self.matrix.column_submatrix(range(self.n, 2 * self.n))

    def column_index(self, element: int) -> int:
        if element == 0 or abs(element) > self.n:
            raise ValueError(f"ground element {element} out of range")
        return abs(element) - 1 if element > 0 else self.n + abs(element) - 1


def representation(m: CombinatorialMap, field: str = RATIONALS) -> Representation:
    """Row-reduce the stacked incidence vectors of a cycle basis.

    The result always has exactly n rows: the row space is a maximal
    isotropic subspace of the 2n-dimensional hyperbolic space.
    """
    if field not in (RATIONALS, GF2):
        raise ValueError(f"unknown field {field!r}")
    if field == RATIONALS and m.mode != ORIENTABLE:
        raise ValueError("non-orientable map requires gf2")
    spine = build_spine(m)
    vectors = [incidence_vector(spine, c) for c in cycle_basis(spine)]
    if field == GF2:
        vectors = [[x % 2 for x in vec] for vec in vectors]
    mat = ExactMatrix(vectors, field, cols=2 * m.n).rref().nonzero_rows()
    if mat.rows != m.n:
        raise RuntimeError(f"incidence row space has rank {mat.rows}, "
                           f"expected {m.n}; this should be impossible for a map")
    return Representation(m.n, field, mat)


def matroid_from_representation(rep: Representation) -> BasisFamily:
    """All admissible n-subsets whose columns form a nonsingular minor."""
    ground = GroundSet(rep.n)
    bases = []
    for subset in ground.admissible_subsets(rep.n):
        cols = sorted(rep.column_index(x) for x in subset)
        if rep.matrix.columns_independent(cols):
            bases.append(subset)
    return BasisFamily(rep.n, bases)
