"""Peel a map into a single strip of barycentric triangles.

The walk starts at a chosen triangle, first crosses its diagonal, and from
then on follows one rule: at a triangle whose edge/coedge pair is still
undecided, cut whichever of the two keeps the surface connected (ties broken
by ``prefer``) and leave across the surviving one; at a decided triangle,
leave across the open side that is not the one just entered.  It stops when
the next triangle has been seen before.  The cuts always form a basis and the
cut-open surface is an annulus or, in degenerate cases, a disk.
"""

from __future__ import annotations

from dataclasses import dataclass

from .deltamatroid import enumerate_bases, format_subset
from .maps import (DIAGONAL, HALF_COEDGE, HALF_EDGE, ORIENTABLE,
                   CombinatorialMap, check_cut_set, cut_surface, is_independent)

DISK = "disk"
ANNULUS = "annulus"


@dataclass(frozen=True)
class PeelStep:
    flag: int
    crossed: str           # side crossed when leaving this flag
    decision: str          # "traverse", "cut-edge(i)" or "cut-coedge(i)"


@dataclass(frozen=True)
class PeelTrace:
    start: int
    steps: tuple[PeelStep, ...]
    cuts: frozenset[int]
    result_shape: str


def _adjacency(m: CombinatorialMap):
    adj = [[] for _ in range(m.num_flags)]
    for a in m.flag_arcs:
        adj[a.u].append((a, a.v))
        adj[a.v].append((a, a.u))
    return adj


def peel(m: CombinatorialMap, start=0, prefer: str = "edge") -> PeelTrace:
    if m.mode != ORIENTABLE:
        raise ValueError("peeling is defined for orientable-mode maps only")
    start = getattr(start, "index", start)
    if not isinstance(start, int) or not 0 <= start < m.num_flags:
        raise ValueError(f"start flag {start!r} not in map")
    if prefer not in ("edge", "coedge"):
        raise ValueError("prefer must be 'edge' or 'coedge'")

    adj = _adjacency(m)

    def arc_of(flag: int, kind: str):
        for a, other in adj[flag]:
            if a.kind == kind:
                return a, other
        raise AssertionError  # every flag has one arc of each kind

    cuts: set[int] = set()
    sealed: set[int] = set()
    steps: list[PeelStep] = []
    visited = {start}

    out_arc, nxt = arc_of(start, DIAGONAL)
    steps.append(PeelStep(start, DIAGONAL, "traverse"))
    current, in_arc = nxt, out_arc
    visited.add(current)

    while True:
        e = abs(m.flag_dart(current))
        if e not in cuts and -e not in cuts:
            candidates = (e, -e) if prefer == "edge" else (-e, e)
            for elem in candidates:
                if is_independent(m, cuts | {elem}):
                    break
            else:
                raise RuntimeError("neither the edge nor the coedge keeps the "
                                   "surface connected; this should be impossible")
            cuts.add(elem)
            for a in m.flag_arcs:
                if a.edge == e and a.kind == (HALF_EDGE if elem > 0 else HALF_COEDGE):
                    sealed.add(a.index)
            exit_kind = HALF_COEDGE if elem > 0 else HALF_EDGE
            decision = f"cut-edge({e})" if elem > 0 else f"cut-coedge({e})"
            out_arc, nxt = arc_of(current, exit_kind)
        else:
            options = [(a, other) for a, other in adj[current]
                       if a.index not in sealed and a.index != in_arc.index]
            assert len(options) == 1, "strip walk lost its way"
            (out_arc, nxt), = options
            exit_kind, decision = out_arc.kind, "traverse"
        steps.append(PeelStep(current, exit_kind, decision))
        if nxt in visited:
            break
        visited.add(nxt)
        current, in_arc = nxt, out_arc

    cut_set = frozenset(cuts)
    stats = cut_surface(m, cut_set)
    triple = (stats.components, stats.boundary_components, stats.euler_characteristic)
    if triple == (1, 1, 1):
        shape = DISK
    elif triple == (1, 2, 0):
        shape = ANNULUS
    else:
        raise RuntimeError(f"peeling produced an unexpected surface {stats}")
    return PeelTrace(start, tuple(steps), cut_set, shape)


def verify_trace(m: CombinatorialMap, trace: PeelTrace):
    """Re-check every trace invariant against the map; returns (ok, problems).

    Checks: all 4n flags visited exactly once, consecutive flags adjacent
    across the recorded sides and the walk closes up, every cut prefix is
    independent, the cut set is an admissible basis matching the recorded
    decisions, and the declared shape matches the cut surface statistics.
    """
    problems: list[str] = []
    flags = [s.flag for s in trace.steps]
    if not flags:
        return False, ["empty trace"]
    if trace.start != flags[0]:
        problems.append("start flag does not match first step")
    if len(set(flags)) != len(flags):
        problems.append("flag revisited")
    if len(flags) != m.num_flags:
        problems.append(f"visited {len(set(flags))} of {m.num_flags} flags")

    step_table = {}
    for a in m.flag_arcs:
        step_table.setdefault((a.kind, a.u), set()).add(a.v)
        step_table.setdefault((a.kind, a.v), set()).add(a.u)
    route = flags + [flags[0]]
    for k, step in enumerate(trace.steps):
        if route[k + 1] not in step_table.get((step.crossed, step.flag), set()):
            problems.append(f"step {k}: flags {step.flag} -> {route[k + 1]} are "
                            f"not adjacent across a {step.crossed}")
            break

    seen_cuts: list[int] = []
    for k, step in enumerate(trace.steps):
        if step.decision == "traverse":
            continue
        e = abs(m.flag_dart(step.flag))
        expected = {f"cut-edge({e})", f"cut-coedge({e})"}
        if step.decision not in expected:
            problems.append(f"step {k}: decision {step.decision!r} names a side "
                            f"not bounding flag {step.flag}")
            continue
        elem = e if step.decision.startswith("cut-edge") else -e
        if elem in seen_cuts or -elem in seen_cuts:
            problems.append(f"step {k}: edge {e} cut twice")
        seen_cuts.append(elem)
        try:
            if not is_independent(m, frozenset(seen_cuts)):
                problems.append(f"step {k}: cut prefix "
                                f"{format_subset(seen_cuts)} disconnects the surface")
        except ValueError as exc:
            problems.append(f"step {k}: {exc}")

    try:
        cut_set = check_cut_set(m, trace.cuts)
    except ValueError:
        problems.append("inadmissible cut set")
        return False, problems
    if frozenset(seen_cuts) != cut_set:
        problems.append("recorded cuts do not match cut decisions")
    if len(cut_set) != m.n:
        problems.append(f"cut set has size {len(cut_set)}, expected {m.n}")
    elif not enumerate_bases(m, limit=max(6, m.n)).is_basis(cut_set):
        problems.append("cut set is not a basis")

    stats = cut_surface(m, cut_set)
    triple = (stats.components, stats.boundary_components, stats.euler_characteristic)
    shapes = {DISK: (1, 1, 1), ANNULUS: (1, 2, 0)}
    if trace.result_shape not in shapes:
        problems.append(f"unknown result shape {trace.result_shape!r}")
    elif shapes[trace.result_shape] != triple:
        problems.append(f"shape {trace.result_shape} does not match cut surface "
                        f"statistics {triple}")
    return not problems, problems
