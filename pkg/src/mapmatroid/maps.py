"""Maps on closed compact surfaces encoded as rotation systems.

A map is a connected graph drawn on a closed surface so that every face is an
open disk.  It is encoded combinatorially: every edge ``i`` (numbered from 1)
has two darts ``+i`` and ``-i``, and each vertex carries the counterclockwise
cyclic order of the darts that leave it.  Per-edge signs extend the encoding
to non-orientable surfaces (a ``-1`` edge reverses local orientation when
crossed); in ``orientable`` mode all signs are ``+1``.

The barycentric flag structure derived here is the workhorse for everything
else: faces, duality, the topological independence oracle for cut sets, and
surface statistics of cut-open maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

ORIENTABLE = "orientable"
SIGNED = "signed"

HALF_EDGE = "half-edge"
HALF_COEDGE = "half-coedge"
DIAGONAL = "diagonal"


class MapError(ValueError):
    """Invalid map data or map file syntax."""


def dart_str(d: int) -> str:
    return f"{abs(d)}{'+' if d > 0 else '-'}"


def parse_dart(token: str) -> int:
    if len(token) < 2 or token[-1] not in "+-" or not token[:-1].isdigit():
        raise MapError(f"bad dart token {token!r}")
    i = int(token[:-1])
    if i == 0:
        raise MapError(f"bad dart token {token!r}")
    return i if token[-1] == "+" else -i


def element_str(x: int) -> str:
    """Ground-set element: ``+i`` is edge i, ``-i`` is coedge i*."""
    return f"{abs(x)}{'*' if x < 0 else ''}"


def parse_element(token: str) -> int:
    starred = token.endswith("*")
    body = token[:-1] if starred else token
    if not body.isdigit() or int(body) == 0:
        raise ValueError(f"bad ground-set element {token!r}")
    return -int(body) if starred else int(body)


def _dart_key(d: int) -> tuple[int, int]:
    return (abs(d), 0 if d > 0 else 1)


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


@dataclass(frozen=True)
class Flag:
    """A triangle of the barycentric subdivision.

    Its three sides are half of edge ``abs(dart)``, half of the matching
    coedge, and a diagonal from the vertex to the face centre.  ``side`` 1 is
    the side to the left of the dart, 0 the side to the right (with vertex
    rotations read counterclockwise).
    """

    index: int
    dart: int
    side: int
    vertex: int
    face: int

    @property
    def edge(self) -> int:
        return abs(self.dart)


@dataclass(frozen=True)
class FlagArc:
    """Adjacency between two flags across one triangle side."""

    index: int
    u: int
    v: int
    kind: str
    edge: int | None


@dataclass(frozen=True)
class FlagGraph:
    n: int
    flags: tuple[Flag, ...]
    arcs: tuple[FlagArc, ...]


@dataclass(frozen=True)
class MapInfo:
    num_vertices: int
    num_edges: int
    num_faces: int
    euler_characteristic: int
    genus: int
    orientable: bool


@dataclass(frozen=True)
class CutSurface:
    components: int
    boundary_components: int
    euler_characteristic: int


class CombinatorialMap:
    """A map given by per-vertex dart rotations and optional edge signs.

    Immutable after construction; rotation cycles are stored canonically
    (each cycle starting at its smallest dart, cycles sorted by that dart).
    """

    def __init__(self, n: int, rotation: Iterable[Iterable[int]],
                 edge_signs: Iterable[int] | None = None, mode: str = ORIENTABLE):
        if mode not in (ORIENTABLE, SIGNED):
            raise MapError(f"unknown mode {mode!r}")
        if not isinstance(n, int) or n < 1:
            raise MapError("map must have at least one edge")
        cycles = []
        seen: set[int] = set()
        for cyc in rotation:
            cyc = tuple(cyc)
            if not cyc:
                raise MapError("vertex with no darts")
            for d in cyc:
                if not isinstance(d, int) or d == 0 or abs(d) > n:
                    raise MapError(f"dart {d!r} out of range for {n} edges")
                if d in seen:
                    raise MapError(f"duplicate dart {dart_str(d)}")
                seen.add(d)
            k = min(range(len(cyc)), key=lambda j: _dart_key(cyc[j]))
            cycles.append(cyc[k:] + cyc[:k])
        for i in range(1, n + 1):
            for d in (i, -i):
                if d not in seen:
                    raise MapError(f"missing dart {dart_str(d)}")
        cycles.sort(key=lambda c: _dart_key(c[0]))

        signs = tuple(edge_signs) if edge_signs is not None else (1,) * n
        if len(signs) != n or any(s not in (1, -1) for s in signs):
            raise MapError("edge_signs must assign +1 or -1 to every edge")
        if mode == ORIENTABLE and any(s == -1 for s in signs):
            raise MapError("negative edge sign in orientable mode")

        self.n = n
        self.mode = mode
        self.rotation: tuple[tuple[int, ...], ...] = tuple(cycles)
        self.edge_signs = signs

        uf = _UnionFind(len(cycles))
        vertex_of = {}
        for vi, cyc in enumerate(cycles):
            for d in cyc:
                vertex_of[d] = vi
        self._vertex_of = vertex_of
        for i in range(1, n + 1):
            uf.union(vertex_of[i], vertex_of[-i])
        if len({uf.find(v) for v in range(len(cycles))}) != 1:
            raise MapError("map is not connected")

    # -- basic structure -------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.rotation)

    def sign(self, i: int) -> int:
        return self.edge_signs[i - 1]

    def vertex_of(self, dart: int) -> int:
        return self._vertex_of[dart]

    @cached_property
    def sigma(self) -> dict[int, int]:
        """Next dart counterclockwise around the same vertex."""
        nxt = {}
        for cyc in self.rotation:
            for j, d in enumerate(cyc):
                nxt[d] = cyc[(j + 1) % len(cyc)]
        return nxt

    # -- flags -----------------------------------------------------------
    # Flag indices: edge i owns flags 4(i-1)..4(i-1)+3 in the order
    # (+i, side 0), (+i, side 1), (-i, side 0), (-i, side 1).

    def flag_index(self, dart: int, side: int) -> int:
        return 4 * (abs(dart) - 1) + (0 if dart > 0 else 2) + side

    def flag_dart(self, f: int) -> int:
        i = f // 4 + 1
        return i if f % 4 < 2 else -i

    def flag_side(self, f: int) -> int:
        return f % 2

    @property
    def num_flags(self) -> int:
        return 4 * self.n

    @cached_property
    def _s2(self) -> tuple[int, ...]:
        """Across the half-edge: same dart, other side."""
        return tuple(f ^ 1 for f in range(self.num_flags))

    @cached_property
    def _s1(self) -> tuple[int, ...]:
        """Across the diagonal: (d, 1) pairs with (sigma(d), 0)."""
        s = [0] * self.num_flags
        for d, nd in self.sigma.items():
            a = self.flag_index(d, 1)
            b = self.flag_index(nd, 0)
            s[a] = b
            s[b] = a
        return tuple(s)

    @cached_property
    def _s0(self) -> tuple[int, ...]:
        """Across the half-coedge: other end of the edge, same edge side.

        An untwisted edge glues (d, 1) to (-d, 0); a ``-1`` edge glues the
        like-numbered sides instead (the ribbon has a half twist).
        """
        s = [0] * self.num_flags
        for i in range(1, self.n + 1):
            if self.sign(i) == 1:
                pairs = [(self.flag_index(i, 1), self.flag_index(-i, 0)),
                         (self.flag_index(-i, 1), self.flag_index(i, 0))]
            else:
                pairs = [(self.flag_index(i, 1), self.flag_index(-i, 1)),
                         (self.flag_index(i, 0), self.flag_index(-i, 0))]
            for a, b in pairs:
                s[a] = b
                s[b] = a
        return tuple(s)

    @cached_property
    def _face_of(self) -> tuple[int, ...]:
        """Face id per flag; faces are orbits of the half-coedge and diagonal
        steps, numbered by the smallest dart they contain."""
        orbit_of = [-1] * self.num_flags
        orbits = []
        for start in range(self.num_flags):
            if orbit_of[start] != -1:
                continue
            members = [start]
            orbit_of[start] = len(orbits)
            stack = [start]
            while stack:
                f = stack.pop()
                for g in (self._s0[f], self._s1[f]):
                    if orbit_of[g] == -1:
                        orbit_of[g] = len(orbits)
                        members.append(g)
                        stack.append(g)
            orbits.append(members)
        order = sorted(range(len(orbits)),
                       key=lambda k: min(_dart_key(self.flag_dart(f)) for f in orbits[k]))
        rank = {old: new for new, old in enumerate(order)}
        return tuple(rank[orbit_of[f]] for f in range(self.num_flags))

    @property
    def num_faces(self) -> int:
        return max(self._face_of) + 1

    @property
    def euler_characteristic(self) -> int:
        return self.num_vertices - self.n + self.num_faces

    @cached_property
    def _flag_coloring(self) -> tuple[int, ...] | None:
        """2-coloring of flags flipped by every adjacency, or None.

        Existence of such a coloring is equivalent to orientability of the
        underlying surface.
        """
        color = [-1] * self.num_flags
        color[0] = 0
        stack = [0]
        while stack:
            f = stack.pop()
            for g in (self._s0[f], self._s1[f], self._s2[f]):
                if color[g] == -1:
                    color[g] = 1 - color[f]
                    stack.append(g)
                elif color[g] == color[f]:
                    return None
        return tuple(color)

    @property
    def orientable(self) -> bool:
        return self._flag_coloring is not None

    @cached_property
    def flag_arcs(self) -> tuple[FlagArc, ...]:
        """All 6n triangle adjacencies in a fixed canonical order.

        Half-edge and half-coedge arcs are stored with ``u`` the side-1 flag
        of the dart named in the construction rule, which is what the
        homology layer relies on to assign crossing signs.
        """
        arcs = []
        for i in range(1, self.n + 1):
            for d in (i, -i):
                arcs.append(FlagArc(len(arcs), self.flag_index(d, 1),
                                    self.flag_index(d, 0), HALF_EDGE, i))
        for i in range(1, self.n + 1):
            if self.sign(i) == 1:
                for d in (i, -i):
                    arcs.append(FlagArc(len(arcs), self.flag_index(d, 1),
                                        self.flag_index(-d, 0), HALF_COEDGE, i))
            else:
                arcs.append(FlagArc(len(arcs), self.flag_index(i, 1),
                                    self.flag_index(-i, 1), HALF_COEDGE, i))
                arcs.append(FlagArc(len(arcs), self.flag_index(i, 0),
                                    self.flag_index(-i, 0), HALF_COEDGE, i))
        for cyc in self.rotation:
            for d in cyc:
                arcs.append(FlagArc(len(arcs), self.flag_index(d, 1),
                                    self.flag_index(self.sigma[d], 0), DIAGONAL, None))
        return tuple(arcs)

    @cached_property
    def flags(self) -> tuple[Flag, ...]:
        return tuple(Flag(f, self.flag_dart(f), self.flag_side(f),
                          self._vertex_of[self.flag_dart(f)], self._face_of[f])
                     for f in range(self.num_flags))

    # -- equality --------------------------------------------------------

    def _key(self):
        return (self.n, self.mode, self.rotation, self.edge_signs)

    def __eq__(self, other):
        return isinstance(other, CombinatorialMap) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        cyc = ", ".join("(" + " ".join(dart_str(d) for d in c) + ")" for c in self.rotation)
        extra = "" if self.mode == ORIENTABLE else f", signs={self.edge_signs}"
        return f"CombinatorialMap(n={self.n}, {cyc}{extra})"


# -- cut sets -------------------------------------------------------------


def check_cut_set(m: CombinatorialMap, cut: Iterable[int]) -> frozenset[int]:
    """Validate a set of ground elements (+i edge, -i coedge); must be
    admissible: at most one of i, i* per edge."""
    cut = frozenset(cut)
    for x in cut:
        if not isinstance(x, int) or x == 0 or abs(x) > m.n:
            raise ValueError(f"ground element {x!r} out of range")
        if -x in cut:
            raise ValueError(f"set is not admissible: contains both "
                             f"{element_str(abs(x))} and {element_str(-abs(x))}")
    return cut


def _arc_removed(arc: FlagArc, cut: frozenset[int]) -> bool:
    if arc.kind == HALF_EDGE:
        return arc.edge in cut
    if arc.kind == HALF_COEDGE:
        return -arc.edge in cut
    return False


def is_independent(m: CombinatorialMap, cut: Iterable[int]) -> bool:
    """True iff cutting the surface along the closed cut elements leaves it
    connected: the flag graph stays connected after removing the half-edge
    arcs of cut edges and the half-coedge arcs of cut coedges."""
    cut = check_cut_set(m, cut)
    cache = getattr(m, "_indep_cache", None)
    if cache is None:
        cache = {}
        m._indep_cache = cache
    if cut in cache:
        return cache[cut]
    uf = _UnionFind(m.num_flags)
    for arc in m.flag_arcs:
        if not _arc_removed(arc, cut):
            uf.union(arc.u, arc.v)
    root = uf.find(0)
    result = all(uf.find(f) == root for f in range(1, m.num_flags))
    cache[cut] = result
    return result


def cut_surface(m: CombinatorialMap, cut: Iterable[int]) -> CutSurface:
    """Statistics of the compact surface obtained by cutting along the
    closure of the cut set.

    The 4n flag triangles are re-glued along all arcs that survive the cut;
    each removed arc contributes two free (boundary) triangle sides.  Euler
    characteristic and boundary circles are read off that cell complex.
    """
    cut = check_cut_set(m, cut)
    kept = [a for a in m.flag_arcs if not _arc_removed(a, cut)]
    removed = [a for a in m.flag_arcs if _arc_removed(a, cut)]

    uf = _UnionFind(m.num_flags)
    for a in kept:
        uf.union(a.u, a.v)
    components = len({uf.find(f) for f in range(m.num_flags)})

    # Corner instances: 3 per flag (0 vertex corner, 1 crossing corner,
    # 2 face corner); gluing a side identifies its two end corners.
    corner_pairs = {HALF_EDGE: (0, 1), HALF_COEDGE: (1, 2), DIAGONAL: (0, 2)}
    cu = _UnionFind(3 * m.num_flags)
    for a in kept:
        for t in corner_pairs[a.kind]:
            cu.union(3 * a.u + t, 3 * a.v + t)
    corner_classes = len({cu.find(c) for c in range(3 * m.num_flags)})
    num_edges_cplx = len(kept) + 2 * len(removed)
    chi = corner_classes - num_edges_cplx + m.num_flags

    # Boundary sides: every removed arc leaves one free side on each of its
    # two flags.  The ends of a free side are corner classes; boundary
    # circles are the components of the resulting degree-2 graph.
    bu = _UnionFind(3 * m.num_flags)
    boundary_nodes = set()
    for a in removed:
        t1, t2 = corner_pairs[a.kind]
        for f in (a.u, a.v):
            c1, c2 = cu.find(3 * f + t1), cu.find(3 * f + t2)
            bu.union(c1, c2)
            boundary_nodes.add(c1)
            boundary_nodes.add(c2)
    boundaries = len({bu.find(c) for c in boundary_nodes})

    return CutSurface(components, boundaries, chi)


def spanning_tree_basis(m: CombinatorialMap) -> frozenset[int]:
    """The basis T union (complement of T) starred, for the lowest-index
    spanning tree T of the underlying graph."""
    uf = _UnionFind(m.num_vertices)
    tree = []
    for i in range(1, m.n + 1):
        u, v = m.vertex_of(i), m.vertex_of(-i)
        if uf.find(u) != uf.find(v):
            uf.union(u, v)
            tree.append(i)
    in_tree = set(tree)
    return frozenset(i if i in in_tree else -i for i in range(1, m.n + 1))


# -- derived maps ----------------------------------------------------------


def map_info(m: CombinatorialMap) -> MapInfo:
    chi = m.euler_characteristic
    if m.orientable:
        genus = (2 - chi) // 2
    else:
        genus = 2 - chi
    return MapInfo(m.num_vertices, m.n, m.num_faces, chi, genus, m.orientable)


def flag_graph(m: CombinatorialMap) -> FlagGraph:
    return FlagGraph(m.n, m.flags, m.flag_arcs)


def _map_from_involutions(n, s0, s1, s2, mode, coloring):
    """Rebuild a rotation system (and edge signs) realizing three flag
    involutions.  ``coloring``, when given, makes all vertex walks co-rotate
    so that an orientable flag system extracts with all signs +1."""
    num = 4 * n

    # Edge orbits under s0, s2 have exactly 4 flags; number them by their
    # smallest flag.
    edge_of = [-1] * num
    edge_orbits = []
    for start in range(num):
        if edge_of[start] != -1:
            continue
        orbit = {start, s2[start], s0[start], s2[s0[start]], s0[s2[start]]}
        assert len(orbit) == 4, "malformed flag system"
        for f in orbit:
            edge_of[f] = len(edge_orbits)
        edge_orbits.append(sorted(orbit))

    # The two s2-pairs of an edge are its darts; the pair holding the orbit
    # minimum is the plus dart.
    dart_of = {}
    for ei, orbit in enumerate(edge_orbits):
        plus = {orbit[0], s2[orbit[0]]}
        for f in orbit:
            dart_of[f] = (ei + 1) if f in plus else -(ei + 1)

    visited = [False] * num
    cycles = []
    side1 = {}
    for start in range(num):
        if visited[start]:
            continue
        if coloring is not None and coloring[start] == coloring[0] ^ 1:
            start = s2[start]
        cyc = []
        cur = start
        while True:
            other = s2[cur]
            visited[cur] = visited[other] = True
            cyc.append(dart_of[cur])
            side1[dart_of[cur]] = other
            cur = s1[other]
            if cur == start:
                break
        cycles.append(cyc)

    signs = []
    for i in range(1, n + 1):
        partner = s0[side1[i]]
        if partner == s2[side1[-i]]:
            signs.append(1)
        else:
            assert partner == side1[-i], "malformed flag system"
            signs.append(-1)
    if mode == ORIENTABLE:
        assert all(s == 1 for s in signs)
        return CombinatorialMap(n, cycles, mode=ORIENTABLE)
    return CombinatorialMap(n, cycles, edge_signs=signs, mode=SIGNED)


def dual_map(m: CombinatorialMap) -> CombinatorialMap:
    """The dual map: one vertex per face, edge i becomes coedge i*.

    On the flag system this just swaps the roles of half-edge and
    half-coedge sides, so the dual lives on the same surface and duality is
    an involution up to isomorphism.
    """
    return _map_from_involutions(m.n, s0=m._s2, s1=m._s1, s2=m._s0,
                                 mode=m.mode, coloring=m._flag_coloring)


def contract_edge(m: CombinatorialMap, i: int) -> CombinatorialMap:
    """Contract the non-loop edge i, merging its endpoint rotations at the
    contraction site; remaining edges are renumbered downwards."""
    if not 1 <= i <= m.n:
        raise MapError(f"no edge {i}")
    u, v = m.vertex_of(i), m.vertex_of(-i)
    if u == v:
        raise MapError(f"edge {i} is a loop")
    if m.n == 1:
        raise MapError("contraction would leave the excluded trivial map")

    cycles = [list(c) for c in m.rotation]
    signs = list(m.edge_signs)

    if signs[i - 1] == -1:
        # Re-sign by switching at the far endpoint: reverse its rotation and
        # toggle every edge with exactly one end there.
        cyc = cycles[v]
        cycles[v] = cyc[::-1]
        counts: dict[int, int] = {}
        for d in cyc:
            counts[abs(d)] = counts.get(abs(d), 0) + 1
        for j, c in counts.items():
            if c == 1:
                signs[j - 1] = -signs[j - 1]

    cu, cv = cycles[u], cycles[v]
    ku, kv = cu.index(i), cv.index(-i)
    merged = cu[ku + 1:] + cu[:ku] + cv[kv + 1:] + cv[:kv]
    new_cycles = [c for w, c in enumerate(cycles) if w not in (u, v)]
    new_cycles.append(merged)

    def relabel(d: int) -> int:
        a = abs(d)
        a2 = a if a < i else a - 1
        return a2 if d > 0 else -a2

    out_cycles = [[relabel(d) for d in c] for c in new_cycles]
    out_signs = [s for j, s in enumerate(signs) if j != i - 1]
    if m.mode == ORIENTABLE:
        return CombinatorialMap(m.n - 1, out_cycles, mode=ORIENTABLE)
    return CombinatorialMap(m.n - 1, out_cycles, edge_signs=out_signs, mode=SIGNED)


def is_isomorphic(m1: CombinatorialMap, m2: CombinatorialMap) -> bool:
    """Flag-system isomorphism (relabelling allowed, reflections included)."""
    if m1.n != m2.n:
        return False
    num = m1.num_flags
    invs1 = (m1._s0, m1._s1, m1._s2)
    invs2 = (m2._s0, m2._s1, m2._s2)
    for y0 in range(num):
        phi = [-1] * num
        phi[0] = y0
        stack = [0]
        ok = True
        while stack and ok:
            x = stack.pop()
            for k in range(3):
                xn, yn = invs1[k][x], invs2[k][phi[x]]
                if phi[xn] == -1:
                    phi[xn] = yn
                    stack.append(xn)
                elif phi[xn] != yn:
                    ok = False
                    break
        if ok and sorted(phi) == list(range(num)):
            return True
    return False


# -- text format ------------------------------------------------------------


def parse_map(text: str) -> CombinatorialMap:
    """Parse the map file format.

    Statements, one per line ('#' starts a comment): ``mode orientable`` or
    ``mode signed``; ``edges <n>``; one ``vertex <name>: <darts>`` per vertex
    with darts like ``2+`` ``2-`` in counterclockwise order; in signed mode
    optional ``sign <i> -`` lines.
    """
    mode = None
    n = None
    cycles: list[tuple[int, ...]] = []
    sign_lines: dict[int, int] = {}
    dart_lines: dict[int, int] = {}

    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kw = tokens[0]
        if kw == "mode":
            if mode is not None:
                raise MapError(f"line {ln}: duplicate mode line")
            if len(tokens) != 2 or tokens[1] not in (ORIENTABLE, SIGNED):
                raise MapError(f"line {ln}: mode must be 'orientable' or 'signed'")
            mode = tokens[1]
        elif kw == "edges":
            if mode is None:
                raise MapError(f"line {ln}: mode line must come first")
            if n is not None:
                raise MapError(f"line {ln}: duplicate edges line")
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise MapError(f"line {ln}: edges takes a number")
            n = int(tokens[1])
            if n == 0:
                raise MapError(f"line {ln}: map must have at least one edge")
        elif kw == "vertex":
            if n is None:
                raise MapError(f"line {ln}: edges line must come before vertices")
            rest = line[len("vertex"):].strip()
            if ":" not in rest:
                raise MapError(f"line {ln}: vertex line needs a ':'")
            name, darts_part = rest.split(":", 1)
            if not name.strip():
                raise MapError(f"line {ln}: vertex line needs a name")
            darts = []
            for tok in darts_part.split():
                try:
                    d = parse_dart(tok)
                except MapError as exc:
                    raise MapError(f"line {ln}: {exc}") from None
                if abs(d) > n:
                    raise MapError(f"line {ln}: dart {tok} out of range for {n} edges")
                if d in dart_lines:
                    raise MapError(f"line {ln}: duplicate dart {dart_str(d)} "
                                   f"(first seen on line {dart_lines[d]})")
                dart_lines[d] = ln
                darts.append(d)
            if not darts:
                raise MapError(f"line {ln}: vertex with no darts")
            cycles.append(tuple(darts))
        elif kw == "sign":
            if n is None:
                raise MapError(f"line {ln}: edges line must come before signs")
            if mode == ORIENTABLE:
                raise MapError(f"line {ln}: sign line in orientable mode")
            if len(tokens) != 3 or not tokens[1].isdigit() or tokens[2] not in "+-":
                raise MapError(f"line {ln}: expected 'sign <edge> -'")
            i = int(tokens[1])
            if not 1 <= i <= n:
                raise MapError(f"line {ln}: no edge {i}")
            if i in sign_lines:
                raise MapError(f"line {ln}: duplicate sign for edge {i}")
            sign_lines[i] = 1 if tokens[2] == "+" else -1
        else:
            raise MapError(f"line {ln}: unknown statement {kw!r}")

    if mode is None:
        raise MapError("missing mode line")
    if n is None:
        raise MapError("missing edges line")
    for i in range(1, n + 1):
        for d in (i, -i):
            if d not in dart_lines:
                raise MapError(f"missing dart {dart_str(d)}")
    signs = [sign_lines.get(i, 1) for i in range(1, n + 1)]
    return CombinatorialMap(n, cycles, edge_signs=signs, mode=mode)


def format_map(m: CombinatorialMap) -> str:
    """Canonical text form; ``parse_map(format_map(m)) == m``."""
    lines = [f"mode {m.mode}", f"edges {m.n}"]
    for vi, cyc in enumerate(m.rotation, start=1):
        lines.append(f"vertex v{vi}: " + " ".join(dart_str(d) for d in cyc))
    for i in range(1, m.n + 1):
        if m.sign(i) == -1:
            lines.append(f"sign {i} -")
    return "\n".join(lines) + "\n"
