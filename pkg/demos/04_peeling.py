"""Peeling a surface into one strip of triangles.

The barycentric subdivision cuts the map into 4n triangles, each bounded by
half an edge, half a coedge and a diagonal.  The peeling walk moves from
triangle to triangle; the first time it meets an edge/coedge pair it cuts
one of the two (keeping the surface connected, preference breaking ties)
and slips across the other.  Every triangle is visited exactly once, the
cuts form a basis, and the cut-open surface is an annulus or a disk.
"""

from mapmatroid import enumerate_bases, format_subset, peel, verify_trace
from mapmatroid.fixtures import load_fixture

for name in ("SPHERE_EDGE", "TORUS_AB", "THETA"):
    m = load_fixture(name)
    trace = peel(m, start=0, prefer="edge")
    print(f"{name}: cuts {format_subset(trace.cuts)}, shape {trace.result_shape}")
    for step in trace.steps:
        print(f"   flag {step.flag:2d}  leave across {step.crossed:11s}  {step.decision}")
    ok, problems = verify_trace(m, trace)
    print("   verified:", ok, problems or "")
    print()

# Preference only matters when both the edge and the coedge keep the
# surface connected; on the torus it flips the whole answer.
torus = load_fixture("TORUS_AB")
family = enumerate_bases(torus)
for prefer in ("edge", "coedge"):
    cuts = peel(torus, prefer=prefer).cuts
    print(f"torus, prefer {prefer:6s} -> cuts {format_subset(cuts)} "
          f"(a basis? {family.is_basis(cuts)})")

# Every start triangle works; the strip just begins elsewhere.
shapes = {peel(torus, start=s).result_shape for s in range(torus.num_flags)}
print("shapes over all torus starts:", shapes)
