"""Command line driver.

Subcommands cover the whole toolkit: vertex listings, the bundled
verification checks, hull conversion, facet censuses, edge certificates,
the three-part face test, clique solving over graph files, and
conversion between the JSON and cdd-style text representations.

Exit codes: 0 on success or a passing verification, 1 when a
verification check fails, 2 on usage errors including tripped size
guards.  All numeric output is exact rational text; no floats anywhere.

Guards can be raised per invocation with --max-bruteforce,
--max-hull-dim and --max-hull-points or the matching environment
variables OMEGA_MAX_BRUTEFORCE, OMEGA_MAX_HULL_DIM, OMEGA_MAX_HULL_POINTS.
--jobs (env OMEGA_JOBS) is validated and accepted; execution is
sequential either way, so output bytes do not depend on it.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys

from . import graph2p, neighborly, omega3_census, omega_core, polyhedra
from .graph2p import assignment_from_text
from .guards import (DEFAULT_BRUTEFORCE_BOUND, DEFAULT_HULL_MAX_DIM,
                     DEFAULT_HULL_MAX_POINTS, ScaleGuardError)

_GUARD_HINTS = {
    "bruteforce": "--max-bruteforce (env OMEGA_MAX_BRUTEFORCE)",
    "hull-dim": "--max-hull-dim (env OMEGA_MAX_HULL_DIM)",
    "hull-points": "--max-hull-points (env OMEGA_MAX_HULL_POINTS)",
    "census": "--allow-large",
}

_ENV_DEFAULTS = (
    ("max_bruteforce", "OMEGA_MAX_BRUTEFORCE", DEFAULT_BRUTEFORCE_BOUND),
    ("max_hull_dim", "OMEGA_MAX_HULL_DIM", DEFAULT_HULL_MAX_DIM),
    ("max_hull_points", "OMEGA_MAX_HULL_POINTS", DEFAULT_HULL_MAX_POINTS),
    ("jobs", "OMEGA_JOBS", 1),
)


def _add_common(sub):
    sub.add_argument("--max-bruteforce", type=int, default=None,
                     help="override the brute-force part bound "
                          "(default %d)" % DEFAULT_BRUTEFORCE_BOUND)
    sub.add_argument("--max-hull-dim", type=int, default=None,
                     help="override the hull dimension bound "
                          "(default %d)" % DEFAULT_HULL_MAX_DIM)
    sub.add_argument("--max-hull-points", type=int, default=None,
                     help="override the hull point-count bound "
                          "(default %d)" % DEFAULT_HULL_MAX_POINTS)
    sub.add_argument("--jobs", type=int, default=None,
                     help="worker count; accepted and validated, execution "
                          "is sequential and output does not depend on it")


def _settle_guards(args):
    for attr, env, default in _ENV_DEFAULTS:
        val = getattr(args, attr, None)
        if val is None:
            raw = os.environ.get(env)
            if raw is None:
                val = default
            else:
                try:
                    val = int(raw)
                except ValueError:
                    raise ValueError("%s=%r is not an integer" % (env, raw))
        if val < 1:
            raise ValueError("%s must be at least 1" % (attr.replace("_", "-"),))
        setattr(args, attr, val)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omega",
        description="exact rational tools for two-per-part clique polytopes")
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("vertices", help="list all polytope vertices")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--reduced", action="store_true",
                   help="print the n(n+1)/2 reduced coordinates instead of "
                        "the full 4n^2")
    _add_common(s)
    s.set_defaults(func=_cmd_vertices)

    s = subs.add_parser("verify", help="run the bundled checks for one n")
    s.add_argument("--n", type=int, required=True)
    _add_common(s)
    s.set_defaults(func=_cmd_verify)

    s = subs.add_parser("hull", help="facets of the reduced polytope as "
                                     "H-representation text")
    s.add_argument("--n", type=int, required=True)
    _add_common(s)
    s.set_defaults(func=_cmd_hull)

    s = subs.add_parser("census", help="facet census as JSON")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--orbits", action="store_true",
                   help="include facet orbits under the symmetry group")
    s.add_argument("--allow-large", action="store_true",
                   help="permit the n = 5 census")
    _add_common(s)
    s.set_defaults(func=_cmd_census)

    s = subs.add_parser("edge-cert",
                        help="certificate that two vertices span an edge")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--a", required=True, help='assignment like "1,2,1"')
    s.add_argument("--b", required=True, help='assignment like "2,1,1"')
    _add_common(s)
    s.set_defaults(func=_cmd_edge_cert)

    s = subs.add_parser("face-test",
                        help="three-part case analysis for an excluded pair")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--exclude", nargs=2, required=True,
                   metavar=("A", "B"), help="the two excluded assignments")
    _add_common(s)
    s.set_defaults(func=_cmd_face_test)

    s = subs.add_parser("clique-solve", help="find or list cliques of a "
                                             "graph JSON file")
    s.add_argument("--graph", required=True, help="path to graph JSON")
    s.add_argument("--enumerate", action="store_true",
                   help="list every clique instead of finding one")
    _add_common(s)
    s.set_defaults(func=_cmd_clique_solve)

    s = subs.add_parser("convert", help="convert cdd-style text to JSON "
                                        "and back")
    s.add_argument("--input", required=True, help="path to the file")
    _add_common(s)
    s.set_defaults(func=_cmd_convert)

    return parser


def _cmd_vertices(args) -> int:
    if args.n < 1:
        raise ValueError("need at least one part")
    for a in omega_core.all_assignments(args.n, args.max_bruteforce):
        if args.reduced:
            coords = omega_core.reduced_vertex(args.n, a).y
        else:
            coords = omega_core.vertex_from_assignment(args.n, a).coords
        print("%s %s" % (a, " ".join(str(c) for c in coords)))
    return 0


def _verify_rows(n: int, bound: int):
    rows = []

    vertices = omega_core.all_vertices(n, bound)
    bad = sum(len(omega_core.check_equalities(x).violations) for x in vertices)
    rows.append(("vertex equalities", bad == 0,
                 "%d vertices, %d violations" % (len(vertices), bad)))

    expected = n * (n + 1) // 2
    if n >= 2:
        dim = omega_core.omega_dimension(n, bound)
        rows.append(("dimension", dim == expected,
                     "affine dimension %d, expected %d" % (dim, expected)))

    fam = omega_core.independent_family(n)
    pts = [omega_core.vertex_from_assignment(n, a).coords for a in fam]
    rank = polyhedra.affine_rank(polyhedra.VRep(omega_core.coord_count(n), pts))
    rows.append(("independent family", rank == expected,
                 "%d assignments, affine rank %d" % (len(fam), rank)))

    if n >= 2:
        assigns = omega_core.all_assignments(n, bound)
        total = 0
        good = 0
        for a, b in itertools.combinations(assigns, 2):
            total += 1
            cert = neighborly.edge_certificate(n, a, b, bound)
            if neighborly.verify_certificate(cert, bound):
                good += 1
        rows.append(("edge certificates", good == total,
                     "%d/%d pairs certified" % (good, total)))

    if n == 3:
        counts = {"disjoint": 0, "shared_edge": 0, "shared_vertex": 0}
        ok = True
        for a, b in itertools.combinations(omega_core.all_assignments(3), 2):
            try:
                report = omega3_census.analyze_pair(a, b)
            except RuntimeError:
                ok = False
                continue
            counts[report.pair_class.kind] += 1
        ok = ok and counts == {"disjoint": 4, "shared_edge": 12,
                               "shared_vertex": 12}
        rows.append(("three-part case analysis", ok,
                     "%d facet pairs, %d edge-coordinate pairs, "
                     "%d non-face pairs"
                     % (counts["disjoint"], counts["shared_edge"],
                        counts["shared_vertex"])))
    return rows


def _cmd_verify(args) -> int:
    if args.n < 1:
        raise ValueError("need at least one part")
    rows = _verify_rows(args.n, args.max_bruteforce)
    width = max(len(name) for name, _, _ in rows) + 2
    failed = False
    for name, ok, detail in rows:
        status = "PASS" if ok else "FAIL"
        if not ok:
            failed = True
        print("%-*s %s  %s" % (width, name + ":", status, detail))
    print("overall: %s" % ("FAIL" if failed else "PASS",))
    return 1 if failed else 0


def _cmd_hull(args) -> int:
    if args.n < 2:
        raise ValueError("hull needs n >= 2")
    vrep = omega_core.reduced_vertex_vrep(args.n, args.max_bruteforce)
    hrep = polyhedra.convex_hull_facets(vrep, args.max_hull_dim,
                                        args.max_hull_points)
    sys.stdout.write(polyhedra.hrep_to_text(hrep))
    return 0


def _cmd_census(args) -> int:
    report = omega3_census.facet_census(args.n, include_orbits=args.orbits,
                                        allow_large=args.allow_large)
    print(omega3_census.census_to_json(report))
    return 0


def _cmd_edge_cert(args) -> int:
    a = assignment_from_text(args.a)
    b = assignment_from_text(args.b)
    cert = neighborly.edge_certificate(args.n, a, b, args.max_bruteforce)
    print(neighborly.certificate_to_json(cert))
    return 0


def _cmd_face_test(args) -> int:
    if args.n != 3:
        raise ValueError("the case analysis is specific to --n 3")
    a = assignment_from_text(args.exclude[0])
    b = assignment_from_text(args.exclude[1])
    report = omega3_census.analyze_pair(a, b)
    out = {
        "class": report.pair_class.kind,
        "agreeing_parts": list(report.pair_class.parts),
        "form": {
            "coeffs": [str(c) for c in report.form.coeffs],
            "rhs": str(report.form.rhs),
        },
        "verdict": report.verdict.kind,
        "face_dimension": report.verdict.dimension,
        "excluded_values": [str(v) for v in report.excluded_values],
        "other_values": [str(v) for v in report.other_values],
    }
    print(json.dumps(out, indent=1))
    return 0


def _cmd_clique_solve(args) -> int:
    with open(args.graph, "r", encoding="ascii") as fh:
        g = graph2p.graph_from_json(fh.read())
    if args.enumerate:
        for a in graph2p.enumerate_cliques(g, args.max_bruteforce):
            print(a)
        return 0
    result = graph2p.find_clique(g)
    print("no clique" if result is None else str(result))
    return 0


def _cmd_convert(args) -> int:
    with open(args.input, "r", encoding="ascii") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        obj = json.loads(text)
        kind = obj.get("kind")
        if kind == "V":
            vrep = polyhedra.VRep(obj["dim"],
                                  [[c for c in row] for row in obj["points"]])
            sys.stdout.write(polyhedra.vrep_to_text(vrep))
        elif kind == "H":
            ineqs = tuple(polyhedra.linear_form(e["coeffs"], e["rhs"])
                          for e in obj["inequalities"])
            eqs = tuple(polyhedra.linear_form(e["coeffs"], e["rhs"])
                        for e in obj["equalities"])
            sys.stdout.write(polyhedra.hrep_to_text(
                polyhedra.HRep(obj["dim"], ineqs, eqs)))
        else:
            raise ValueError('JSON needs "kind": "V" or "H"')
    elif stripped.startswith("V-representation"):
        vrep = polyhedra.vrep_from_text(text)
        out = {"kind": "V", "dim": vrep.dim,
               "points": [[str(c) for c in p] for p in vrep.points]}
        print(json.dumps(out, indent=1))
    elif stripped.startswith("H-representation"):
        hrep = polyhedra.hrep_from_text(text)
        out = {"kind": "H", "dim": hrep.dim,
               "inequalities": [{"coeffs": [str(c) for c in f.coeffs],
                                 "rhs": str(f.rhs)}
                                for f in hrep.inequalities],
               "equalities": [{"coeffs": [str(c) for c in f.coeffs],
                               "rhs": str(f.rhs)}
                              for f in hrep.equalities]}
        print(json.dumps(out, indent=1))
    else:
        raise ValueError("cannot tell JSON from cdd-style text")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        _settle_guards(args)
        return args.func(args)
    except ScaleGuardError as exc:
        hint = _GUARD_HINTS.get(exc.guard)
        extra = "; raise it with %s" % (hint,) if hint else ""
        print("error: %s%s" % (exc, extra), file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print("error: %s" % (exc,), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
