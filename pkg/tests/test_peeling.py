import dataclasses

import pytest

from mapmatroid import (ANNULUS, DISK, enumerate_bases, enumerate_maps,
                        is_independent, peel, verify_trace)
from mapmatroid.fixtures import load_fixture

ORIENTABLE_FIXTURES = ["SPHERE_EDGE", "SPHERE_LOOP", "TORUS_AB", "THETA"]


@pytest.mark.parametrize("name", ORIENTABLE_FIXTURES)
@pytest.mark.parametrize("prefer", ["edge", "coedge"])
def test_peel_every_start(name, prefer):
    m = load_fixture(name)
    fam = enumerate_bases(m)
    for start in range(m.num_flags):
        trace = peel(m, start=start, prefer=prefer)
        ok, problems = verify_trace(m, trace)
        assert ok, problems
        flags = [s.flag for s in trace.steps]
        assert len(flags) == m.num_flags
        assert len(set(flags)) == m.num_flags
        assert fam.is_basis(trace.cuts)
        assert trace.result_shape in (DISK, ANNULUS)


def test_peel_forced_decisions(fixture_maps):
    # cutting the sphere loop itself would disconnect, so the coedge is cut
    # whatever the preference says
    for prefer in ("edge", "coedge"):
        assert peel(fixture_maps["SPHERE_LOOP"], prefer=prefer).cuts == {-1}
        assert peel(fixture_maps["SPHERE_EDGE"], prefer=prefer).cuts == {1}


def test_peel_expected_cuts(fixture_maps):
    ta = fixture_maps["TORUS_AB"]
    for start in range(ta.num_flags):
        assert peel(ta, start=start, prefer="edge").cuts == {1, 2}
        assert peel(ta, start=start, prefer="coedge").cuts == {-1, -2}
    assert peel(fixture_maps["SPHERE_EDGE"]).result_shape == DISK
    assert peel(ta).result_shape == DISK  # the square presentation
    assert peel(fixture_maps["THETA"]).result_shape == ANNULUS


def test_peel_prefix_independence(fixture_maps):
    m = fixture_maps["THETA"]
    trace = peel(m)
    prefix = []
    for step in trace.steps:
        if step.decision == "traverse":
            continue
        e = abs(m.flag_dart(step.flag))
        prefix.append(e if step.decision.startswith("cut-edge") else -e)
        assert is_independent(m, frozenset(prefix))
    assert frozenset(prefix) == trace.cuts


def test_peel_errors(fixture_maps):
    with pytest.raises(ValueError, match="orientable"):
        peel(fixture_maps["RP2_LOOP"])
    with pytest.raises(ValueError, match="start flag"):
        peel(fixture_maps["TORUS_AB"], start=99)
    with pytest.raises(ValueError, match="prefer"):
        peel(fixture_maps["TORUS_AB"], prefer="both")


def test_verify_trace_diagnostics(fixture_maps):
    m = fixture_maps["SPHERE_EDGE"]
    trace = peel(m)

    revisit = dataclasses.replace(trace, steps=trace.steps[:-1] + (trace.steps[0],))
    ok, problems = verify_trace(m, revisit)
    assert not ok and any("flag revisited" in p for p in problems)

    bad_cuts = dataclasses.replace(trace, cuts=frozenset({1, -1}))
    ok, problems = verify_trace(m, bad_cuts)
    assert not ok and any("inadmissible cut set" in p for p in problems)

    wrong_shape = dataclasses.replace(trace, result_shape=ANNULUS)
    ok, problems = verify_trace(m, wrong_shape)
    assert not ok and any("does not match cut surface" in p for p in problems)

    short = dataclasses.replace(trace, steps=trace.steps[:2])
    ok, problems = verify_trace(m, short)
    assert not ok

    ok, problems = verify_trace(m, trace)
    assert ok and problems == []


def test_peel_small_corpus():
    for n in (1, 2, 3):
        for m in enumerate_maps(n):
            fam = enumerate_bases(m)
            for prefer in ("edge", "coedge"):
                for start in range(m.num_flags):
                    trace = peel(m, start=start, prefer=prefer)
                    ok, problems = verify_trace(m, trace)
                    assert ok, (m, start, prefer, problems)
                    assert fam.is_basis(trace.cuts)
