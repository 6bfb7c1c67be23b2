"""Batch command line front end.

Every command reads a map file, prints deterministic text and exits 0 on
success, 1 when a `check` property fails (or oracles disagree), 2 on usage
or parse errors.
"""

from __future__ import annotations

import argparse
import sys

from . import deltamatroid, homology, maps, peeling
from .linalg import GF2, RATIONALS

FORMAT_HEADER = "# mapmatroid-format 1"

_FIELDS = {"q": RATIONALS, "f2": GF2}


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mapmatroid",
        description="exact delta-matroid and surface tools for rotation-system maps")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("mapfile", help="map file (see README for the format)")
        return sp

    add("info", "vertex/edge/face counts, Euler characteristic, genus")
    add("dual", "print the dual map in map file format")

    sp = add("bases", "list all bases of the map")
    sp.add_argument("--oracle", choices=["topo", "minor", "both"], default="topo")
    sp.add_argument("--field", choices=["q", "f2"], default=None)
    sp.add_argument("--limit", type=int, default=6,
                    help="largest n the enumeration will accept (default 6)")

    sp = add("represent", "print the canonical row representation")
    sp.add_argument("--field", choices=["q", "f2"], default="q")

    add("check", "run the five structural property checks")

    sp = add("greedy", "run the greedy algorithm for an edge ordering")
    sp.add_argument("--order", required=True,
                    help="comma separated permutation of 1..n, e.g. 2,1,3")

    sp = add("peel", "peel the map into a strip")
    sp.add_argument("--start", type=int, default=0, help="start flag id (default 0)")
    sp.add_argument("--prefer", choices=["edge", "coedge"], default="edge")
    sp.add_argument("--trace", action="store_true", help="print every step")

    sp = add("contract", "contract a non-loop edge")
    sp.add_argument("--edge", type=int, required=True)
    return p


def _load_map(path: str) -> maps.CombinatorialMap:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise maps.MapError(f"cannot read {path}: {exc.strerror}") from None
    return maps.parse_map(text)


def _cmd_info(args, out):
    m = _load_map(args.mapfile)
    info = maps.map_info(m)
    out.write(f"vertices {info.num_vertices}\n")
    out.write(f"edges {info.num_edges}\n")
    out.write(f"faces {info.num_faces}\n")
    out.write(f"euler_characteristic {info.euler_characteristic}\n")
    out.write(f"genus {info.genus}\n")
    out.write(f"orientable {'yes' if info.orientable else 'no'}\n")
    return 0


def _cmd_dual(args, out):
    m = _load_map(args.mapfile)
    out.write(FORMAT_HEADER + "\n")
    out.write(maps.format_map(maps.dual_map(m)))
    return 0


def _minor_field(m, requested):
    """Field for minor-oracle queries; signed maps fall back to GF(2)."""
    if m.mode != maps.ORIENTABLE:
        return GF2, requested != GF2
    return requested if requested is not None else RATIONALS, False


def _cmd_bases(args, out):
    m = _load_map(args.mapfile)
    requested = _FIELDS[args.field] if args.field else None
    family = None
    if args.oracle in ("topo", "both"):
        family = deltamatroid.enumerate_bases(m, limit=args.limit)
    if args.oracle in ("minor", "both"):
        field, fell_back = _minor_field(m, requested)
        if fell_back:
            out.write("# note: signed map, minors taken over gf2\n")
        rep = homology.representation(m, field)
        minor_family = homology.matroid_from_representation(rep)
        if family is not None and family != minor_family:
            print("oracle mismatch: topological and minor bases differ",
                  file=sys.stderr)
            return 1
        family = minor_family
    out.write(family.to_text())
    return 0


def _cmd_represent(args, out):
    m = _load_map(args.mapfile)
    rep = homology.representation(m, _FIELDS[args.field])
    labels = [str(i) for i in range(1, m.n + 1)] + [f"{i}*" for i in range(1, m.n + 1)]
    out.write(FORMAT_HEADER + "\n")
    out.write("# columns " + " ".join(labels) + "\n")
    out.write(rep.matrix.to_text())
    return 0


def _cmd_check(args, out):
    m = _load_map(args.mapfile)
    field = RATIONALS if m.mode == maps.ORIENTABLE else GF2

    results: list[tuple[str, bool]] = []
    family = deltamatroid.enumerate_bases(m)
    results.append(("cardinality-n",
                    len(family) > 0 and all(len(b) == m.n for b in family.bases)))
    ok, _ = deltamatroid.check_symmetric_exchange(family)
    results.append(("exchange", ok))
    results.append(("evenness", deltamatroid.check_even(family)))

    spine = homology.build_spine(m)
    vectors = [homology.incidence_vector(spine, c)
               for c in homology.cycle_basis(spine)]
    iso = all(homology.pair_product(u, v, field) == 0
              for u in vectors for v in vectors)
    results.append(("isotropy", iso))

    rep = homology.representation(m, field)
    agrees = homology.matroid_from_representation(rep) == family
    results.append(("oracle-agreement", agrees))

    failed = False
    for name, ok in results:
        out.write(f"{'PASS' if ok else 'FAIL'} {name}\n")
        failed = failed or not ok
    return 1 if failed else 0


def _cmd_greedy(args, out):
    m = _load_map(args.mapfile)
    try:
        order = [int(tok) for tok in args.order.split(",")]
    except ValueError:
        raise maps.MapError(f"bad --order value {args.order!r}") from None
    basis = deltamatroid.greedy(m.n, deltamatroid.map_independence_oracle(m), order)
    out.write(deltamatroid.format_subset(basis) + "\n")
    return 0


def _cmd_peel(args, out):
    m = _load_map(args.mapfile)
    trace = peeling.peel(m, start=args.start, prefer=args.prefer)
    if args.trace:
        for step in trace.steps:
            out.write(f"{step.flag} {step.crossed} {step.decision}\n")
    out.write("cuts: " + deltamatroid.format_subset(trace.cuts) + "\n")
    out.write(f"shape: {trace.result_shape}\n")
    return 0


def _cmd_contract(args, out):
    m = _load_map(args.mapfile)
    out.write(FORMAT_HEADER + "\n")
    out.write(maps.format_map(maps.contract_edge(m, args.edge)))
    return 0


_HANDLERS = {
    "info": _cmd_info,
    "dual": _cmd_dual,
    "bases": _cmd_bases,
    "represent": _cmd_represent,
    "check": _cmd_check,
    "greedy": _cmd_greedy,
    "peel": _cmd_peel,
    "contract": _cmd_contract,
}


def run(argv=None, out=None) -> int:
    """Parse argv, run the command, return the exit code."""
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _HANDLERS[args.command](args, out)
    except (maps.MapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
