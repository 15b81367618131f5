"""Command-line interface; the only process boundary of the package.

Exit codes are a contract so shell pipelines can tell outcomes apart:

    0  success (including "the test ran and its verdict is negative",
       as for a failing Bruck-Ryser order: the computation succeeded)
    1  verification failure: the math disagrees (axiom failure,
       two-route mismatch, oracle mismatch), witness printed
    2  usage or input-format error
    3  an enumeration budget or cap was exceeded

With --json every payload is wrapped uniformly as
{"command": ..., "ok": ..., "data": {...}}.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import geometry as geo
from . import planes as pl
from .errors import (BudgetExceeded, DegenerateQ, DimensionMismatch,
                     GeometryFormatError, NotAPrimePower)
from .groups import (alternating_group_comparison, brute_force_psl_order,
                     group_order)
from .paths import area_generating_function
from .qcalc import QPoly, q_binomial_recurrence, q_binomial_quotient
from .qword import expand_binomial

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass
class CommandResult:
    exit_code: int
    text: str = ""
    error: str = ""


def _poly_text(p: QPoly) -> str:
    """Space-separated coefficients, low to high; '0' for the zero polynomial."""
    if not p:
        return "0"
    return " ".join(str(c) for c in p.coeffs)


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise GeometryFormatError(f"cannot read {path}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise GeometryFormatError(f"{path}: invalid JSON at line {e.lineno}") from e


# --- subcommand handlers: return (exit_code, text_lines, payload) -----------

def _cmd_qbinom(args):
    rec = q_binomial_recurrence(args.n, args.k)
    quo = q_binomial_quotient(args.n, args.k)
    agree = rec == quo
    payload = {"n": args.n, "k": args.k,
               "coefficients": list(rec.coeffs), "routes_agree": agree}
    if not agree:
        lines = ["MISMATCH between the recurrence and quotient routes:",
                 f"  recurrence: {_poly_text(rec)}",
                 f"  quotient:   {_poly_text(quo)}"]
        payload["quotient_coefficients"] = list(quo.coeffs)
        return EXIT_VERIFY, lines, payload
    if args.at is not None:
        value = rec.evaluate(args.at)
        payload["value_at"] = {"q": args.at, "value": value}
        return EXIT_OK, [str(value)], payload
    return EXIT_OK, [_poly_text(rec)], payload


def _cmd_expand(args):
    p = expand_binomial(args.n)
    lines = [f"x^{a} y^{b}: {coeff}" for (a, b), coeff in p.terms()]
    payload = {"n": args.n,
               "terms": [{"x": a, "y": b, "coefficients": list(c.coeffs)}
                         for (a, b), c in p.terms()]}
    return EXIT_OK, lines, payload


def _cmd_subspaces(args):
    from .linalg import enumerate_subspaces
    subs = enumerate_subspaces(args.q, args.n, args.k, budget=args.budget)
    expected = q_binomial_recurrence(args.n, args.k).evaluate(args.q)
    ok = len(subs) == expected
    lines = [f"count: {len(subs)} (expected {expected})"]
    payload = {"q": args.q, "n": args.n, "k": args.k,
               "count": len(subs), "expected": expected, "matches": ok}
    if args.list:
        basis_rows = [s.basis_codes() for s in subs]
        for rows in basis_rows:
            lines.append("; ".join(" ".join(str(c) for c in row) for row in rows)
                         or "(empty basis)")
        payload["subspaces"] = [[list(row) for row in rows] for rows in basis_rows]
    if not ok:
        lines.append("MISMATCH: enumeration disagrees with the Gaussian binomial")
        return EXIT_VERIFY, lines, payload
    return EXIT_OK, lines, payload


def _cmd_geometry_build(args):
    if args.projective:
        q, n = args.projective
        g = geo.build_projective_space(q, n, budget=args.budget)
    else:
        g = geo.build_boolean_geometry(args.boolean)
    doc = geo.geometry_to_json(g)
    return EXIT_OK, [json.dumps(doc, indent=2)], doc


def _check_lines(title, results):
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{title} {r.number}: {status} - {r.description}")
        if r.witness:
            lines.append(f"  witness: {r.witness}")
    return lines


def _cmd_geometry_check(args):
    g = geo.geometry_from_json(_load_json(args.file))
    report = geo.validate_axioms(g)
    lines = _check_lines("axiom", report.axioms)
    lines.append(f"inferred order: {report.order}, dimension: {report.dimension}")
    payload = {"axioms": report.as_dict()}
    if not report.passed:
        lines.append("axioms failed; skipping dependent checks")
        payload["passed"] = False
        return EXIT_VERIFY, lines, payload

    derived = geo.check_derived_properties(g)
    lines += _check_lines("property", derived.properties)
    pc = geo.point_count_check(g)
    lines.append(f"point count: {pc.actual} (expected {pc.expected}): "
                 f"{'PASS' if pc.passed else 'FAIL'}")
    census = geo.subspace_census(g)
    for k in sorted(census.expected):
        got = census.counts.get(k, 0)
        lines.append(f"census dim {k}: {got} (expected {census.expected[k]})")
    lines.append(f"census: {'PASS' if census.passed else 'FAIL'}")
    payload.update({
        "derived_properties": derived.as_dict(),
        "point_count": {"expected": pc.expected, "actual": pc.actual,
                        "passed": pc.passed},
        "census": census.as_dict(),
    })
    ok = derived.passed and pc.passed and census.passed
    payload["passed"] = ok
    return (EXIT_OK if ok else EXIT_VERIFY), lines, payload


def _cmd_geometry_collineations(args):
    g = geo.geometry_from_json(_load_json(args.file))
    count = geo.collineation_order(g, max_points=args.max_points)
    payload = {"points": len(g.points), "collineations": count}
    return EXIT_OK, [f"collineations: {count}"], payload


def _cmd_geometry_affine(args):
    sizes = geo.affine_decomposition(args.q, args.n)
    payload = {"q": args.q, "n": args.n, "piece_sizes": sizes,
               "total": sum(sizes)}
    lines = [f"piece sizes: {' '.join(str(s) for s in sizes)}",
             f"total points: {sum(sizes)}"]
    return EXIT_OK, lines, payload


def _cmd_plane_check(args):
    plane = pl.plane_from_json(_load_json(args.file))
    report = pl.validate_plane(plane)
    lines = []
    for c in report.checks:
        lines.append(f"{'PASS' if c.passed else 'FAIL'} - {c.description}")
        if c.witness:
            lines.append(f"  witness: {c.witness}")
    lines.append(f"order: {report.order}")
    if not report.at_least_three_points:
        lines.append("note: some line has fewer than three points "
                     "(degenerate; order-1 structures look like this)")
    payload = report.as_dict()
    return (EXIT_OK if report.passed else EXIT_VERIFY), lines, payload


def _cmd_plane_bruck_ryser(args):
    order = args.order
    verdict = pl.bruck_ryser(order)
    payload = {"order": order, "verdict": verdict.value}
    if verdict is pl.BruckRyserVerdict.NOT_APPLICABLE:
        lines = [f"NOT APPLICABLE ({order} = {order % 4} mod 4)"]
    elif verdict is pl.BruckRyserVerdict.FAILS:
        lines = [f"FAILS ({order} = {order % 4} mod 4, not a sum of two squares)"]
    else:
        a, b = pl.two_squares(order)
        payload["decomposition"] = [a, b]
        lines = [f"PASSES ({order} = {a}^2 + {b}^2)"]
    if order == 10:
        note = ("note: order 10 passes this test, but no projective plane of "
                "order 10 exists (ruled out by the Lam-Thiel-Swiercz "
                "exhaustive computer search)")
        payload["note"] = note
        lines.append(note)
    return EXIT_OK, lines, payload


def _cmd_paths_gf(args):
    gf = area_generating_function(args.m, args.n, max_steps=args.max_steps)
    target = q_binomial_recurrence(args.m + args.n, args.m)
    ok = gf == target
    lines = [_poly_text(gf),
             f"matches [{args.m + args.n} choose {args.m}]_q: "
             f"{'PASS' if ok else 'FAIL'}"]
    payload = {"m": args.m, "n": args.n, "coefficients": list(gf.coeffs),
               "matches_gaussian_binomial": ok}
    if not ok:
        payload["expected_coefficients"] = list(target.coeffs)
        lines.append(f"expected: {_poly_text(target)}")
    return (EXIT_OK if ok else EXIT_VERIFY), lines, payload


def _cmd_group_order(args):
    report = group_order(args.family, args.n, args.q)
    lines = [f"|{report.family}_{report.n}(F_{report.q})| = {report.order}"]
    payload = {"family": report.family, "n": report.n, "q": report.q,
               "order": report.order, "method": report.method}
    if args.brute_force:
        if report.family != "PSL":
            raise ValueError("--brute-force is implemented for PSL only")
        brute = brute_force_psl_order(args.n, args.q)
        ok = brute == report.order
        lines.append(f"brute force: {brute} - {'MATCH' if ok else 'MISMATCH'}")
        payload["brute_force"] = brute
        payload["matches"] = ok
        if not ok:
            return EXIT_VERIFY, lines, payload
    return EXIT_OK, lines, payload


def _cmd_group_an(args):
    rep = alternating_group_comparison(args.n)
    simple = " (simple)" if rep.alternating_is_simple else ""
    lines = [
        f"A_{rep.n}: order {rep.alternating_order}{simple}",
        f"full collineation group of the order-1 geometry on {rep.n} points: "
        f"S_{rep.n}, order {rep.symmetric_order}",
    ]
    return EXIT_OK, lines, rep.as_dict()


# --- parser ------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qproj",
        description="Exact q-analogues, subspace enumeration over F_q, and "
                    "finite projective geometry validation.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true",
                       help="emit a uniform JSON payload")

    p = sub.add_parser("qbinom", help="Gaussian binomial by both routes")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--at", type=int, default=None, metavar="Q0",
                   help="evaluate at q = Q0 instead of printing coefficients")
    add_json(p)
    p.set_defaults(handler=_cmd_qbinom)

    p = sub.add_parser("expand", help="normal-ordered expansion of (x+y)^n")
    p.add_argument("n", type=int)
    add_json(p)
    p.set_defaults(handler=_cmd_expand)

    p = sub.add_parser("subspaces", help="enumerate k-subspaces of F_q^n")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--list", action="store_true", help="print canonical bases")
    p.add_argument("--budget", type=int, default=10 ** 6)
    add_json(p)
    p.set_defaults(handler=_cmd_subspaces)

    pg = sub.add_parser("geometry", help="incidence geometry commands")
    gsub = pg.add_subparsers(dest="subcommand", required=True)

    p = gsub.add_parser("build", help="construct a geometry, JSON to stdout")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--projective", nargs=2, type=int, metavar=("Q", "N"))
    group.add_argument("--boolean", type=int, metavar="N")
    p.add_argument("--budget", type=int, default=geo.DEFAULT_GEOMETRY_BUDGET)
    add_json(p)
    p.set_defaults(handler=_cmd_geometry_build)

    p = gsub.add_parser("check", help="validate axioms, counts and census")
    p.add_argument("file")
    add_json(p)
    p.set_defaults(handler=_cmd_geometry_check)

    p = gsub.add_parser("collineations", help="brute-force collineation count")
    p.add_argument("file")
    p.add_argument("--max-points", type=int,
                   default=geo.DEFAULT_COLLINEATION_CAP)
    add_json(p)
    p.set_defaults(handler=_cmd_geometry_collineations)

    p = gsub.add_parser("affine", help="affine piece sizes of P^n(F_q)")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    add_json(p)
    p.set_defaults(handler=_cmd_geometry_affine)

    pp = sub.add_parser("plane", help="projective plane commands")
    psub = pp.add_subparsers(dest="subcommand", required=True)

    p = psub.add_parser("check", help="validate the plane conditions")
    p.add_argument("file")
    add_json(p)
    p.set_defaults(handler=_cmd_plane_check)

    p = psub.add_parser("bruck-ryser", help="sum-of-two-squares order test")
    p.add_argument("order", type=int)
    add_json(p)
    p.set_defaults(handler=_cmd_plane_bruck_ryser)

    pq = sub.add_parser("paths", help="lattice path commands")
    qsub = pq.add_subparsers(dest="subcommand", required=True)

    p = qsub.add_parser("gf", help="area generating function of the m-by-n box")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--max-steps", type=int, default=24)
    add_json(p)
    p.set_defaults(handler=_cmd_paths_gf)

    pr = sub.add_parser("group", help="classical group orders")
    rsub = pr.add_subparsers(dest="subcommand", required=True)

    p = rsub.add_parser("order", help="order of GL/SL/PGL/PSL over F_q")
    p.add_argument("family", choices=["GL", "SL", "PGL", "PSL",
                                      "gl", "sl", "pgl", "psl"])
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--brute-force", action="store_true",
                   help="recount by matrix enumeration and compare")
    add_json(p)
    p.set_defaults(handler=_cmd_group_order)

    p = rsub.add_parser("an", help="alternating group vs order-1 collineations")
    p.add_argument("n", type=int)
    add_json(p)
    p.set_defaults(handler=_cmd_group_an)

    return parser


def run(argv: list[str]) -> CommandResult:
    """Parse and execute; printing is left to main()."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse already printed usage/help; normalize the code
        code = EXIT_OK if e.code in (0, None) else EXIT_USAGE
        return CommandResult(code)
    try:
        exit_code, lines, payload = args.handler(args)
    except GeometryFormatError as e:
        return CommandResult(EXIT_USAGE, error=f"format error: {e}")
    except (NotAPrimePower, DegenerateQ, DimensionMismatch, ValueError) as e:
        return CommandResult(EXIT_USAGE, error=f"error: {e}")
    except BudgetExceeded as e:
        return CommandResult(EXIT_BUDGET, error=f"budget exceeded: {e}")
    if getattr(args, "json", False):
        command = args.command + (
            f" {args.subcommand}" if getattr(args, "subcommand", None) else "")
        wrapped = {"command": command, "ok": exit_code == EXIT_OK, "data": payload}
        return CommandResult(exit_code, json.dumps(wrapped, indent=2))
    return CommandResult(exit_code, "\n".join(lines))


def main() -> None:
    result = run(sys.argv[1:])
    if result.text:
        print(result.text)
    if result.error:
        print(result.error, file=sys.stderr)
    sys.exit(result.exit_code)


if __name__ == "__main__":
    main()
