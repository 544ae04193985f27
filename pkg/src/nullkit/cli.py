"""``nullkit`` command line: JSON in, JSON out.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 theorem violated.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .errors import DomainError, TheoremViolated
from .gridcore import DEFAULT_MAX_GRID_POINTS, Grid, GridMap, compute_N
from .multipoly import MultiPoly, parse_univariate
from .ring import Integers, IntegersMod, ring_from_json

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_THEOREM = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _dump(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _read_input(args) -> dict:
    path = getattr(args, "infile", None)
    try:
        if path and path != "-":
            with open(path, encoding="utf-8") as fh:
                return json.load(fh)
        return json.load(sys.stdin)
    except OSError as exc:
        raise UsageError(f"cannot read input: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"input is not valid JSON: {exc}") from None


def _grid(doc: dict, args) -> Grid:
    if "grid" not in doc:
        raise UsageError("input needs a 'grid' object")
    limit = None if args.force else args.max_grid_points
    return Grid.from_json(doc["grid"], max_points=limit)


def _poly(obj, ring, nvars: int) -> MultiPoly:
    if isinstance(obj, str):
        if nvars != 1:
            raise UsageError("string polynomials are univariate only; use JSON terms")
        return parse_univariate(obj, ring)
    obj = dict(obj)
    obj.setdefault("nvars", nvars)
    return MultiPoly.from_json(obj, ring)


def _values(doc: dict, grid: Grid) -> list[int]:
    v = doc.get("values")
    if v is None:
        raise UsageError("input needs 'values'")
    if v and isinstance(v[0], dict):
        return GridMap.from_json(grid, v).values
    return [grid.ring.element_from_json(a) for a in v]


# -- subcommands -----------------------------------------------------------

def cmd_grid_info(args) -> dict:
    grid = _grid(_read_input(args), args)
    return {
        "class": grid.grid_class.value,
        "d": list(grid.d),
        "sigmaD": grid.sigma_d,
        "size": grid.size,
        "N": compute_N(grid).to_json(),
    }


def cmd_interpolate(args) -> dict:
    from .interpolate import interpolate_division

    doc = _read_input(args)
    grid = _grid(doc, args)
    return {"poly": interpolate_division(grid, _values(doc, grid)).to_json()}


def cmd_invert(args) -> dict:
    from .interpolate import invert_integral

    doc = _read_input(args)
    grid = _grid(doc, args)
    src = _poly(doc["poly"], grid.ring, grid.n) if "poly" in doc else _values(doc, grid)
    return {"poly": invert_integral(grid, src).to_json()}


def cmd_coeff(args) -> dict:
    from .coefficient import coeff_formula_general, coeff_formula_main

    doc = _read_input(args)
    grid = _grid(doc, args)
    P = _poly(doc["poly"], grid.ring, grid.n)
    R = grid.ring
    if args.general:
        e = doc.get("e")
        if e is None:
            raise UsageError("--general needs 'e' in the input")
        return {"e": list(e), "coefficient": R.element_to_json(coeff_formula_general(grid, P, e))}
    return {"coefficient_d": R.element_to_json(coeff_formula_main(grid, P))}


def cmd_trim(args) -> dict:
    from .nullsatz import trim

    doc = _read_input(args)
    grid = _grid(doc, args)
    return trim(grid, _poly(doc["poly"], grid.ring, grid.n)).to_json()


def cmd_certify(args) -> dict:
    from .nullsatz import certify_vanishing

    doc = _read_input(args)
    grid = _grid(doc, args)
    return certify_vanishing(grid, _poly(doc["poly"], grid.ring, grid.n)).to_json()


def cmd_permanent(args) -> dict:
    from .permanent import RingMatrix, per_delta, permanent_formula

    doc = _read_input(args)
    A = RingMatrix.from_json(doc["matrix"])
    R = A.ring
    out: dict = {}
    if "grid" in doc:
        grid = _grid(doc, args)
        b = doc.get("b") or [0] * A.m
        out["delta"] = list(grid.d)
        out["perDelta"] = R.element_to_json(permanent_formula(A, [R.element_from_json(v) for v in b], grid))
        out["gridSumAgrees"] = True
        return out
    delta = doc.get("delta") or [1] * A.n
    out["delta"] = list(delta)
    out["perDelta"] = R.element_to_json(per_delta(A, delta))
    return out


def cmd_alon_tarsi(args) -> dict:
    from .permanent import OrientedMultigraph, alon_tarsi_count, incidence_matrix, per_delta

    doc = _read_input(args)
    G = OrientedMultigraph.from_json(doc["graph"])
    delta = tuple(doc.get("delta") or G.head_degrees())
    even, odd = alon_tarsi_count(G, delta)
    return {"delta": list(delta), "even": even, "odd": odd, "difference": even - odd,
            "perDelta": per_delta(incidence_matrix(G), delta)}


def cmd_solve_check(args) -> dict:
    from .solver import check_algebraic_solution, problem_from_json

    doc = _read_input(args)
    grid = _grid(doc, args)
    prob, imp = problem_from_json(doc["problem"], grid)
    P = _poly(doc["poly"], grid.ring, grid.n)
    return check_algebraic_solution(P, prob, imp).to_json()


def cmd_solve_construct(args) -> dict:
    from .solver import check_algebraic_solution, construct_algebraic_solution, problem_from_json

    doc = _read_input(args)
    grid = _grid(doc, args)
    prob, imp = problem_from_json(doc["problem"], grid)
    P = construct_algebraic_solution(prob, imp)
    return {"poly": P.to_json(), "check": check_algebraic_solution(P, prob, imp).to_json()}


def cmd_check(args) -> dict:
    from . import numapps

    which = args.which
    if which == "zm":
        R = IntegersMod(args.m)
        if args.poly is not None:
            P = _poly(args.poly, R, args.n)
        else:
            P = _poly(_read_input(args)["poly"], R, args.n)
        return numapps.zm_second_nonzero(P, args.m, args.n, force=args.force).to_json()
    if which == "padic":
        return numapps.padic_product_divisibility(args.y, args.p, args.k).to_json()
    if which == "cd":
        size, bound, ok = numapps.cauchy_davenport(args.A, args.B, args.p)
        return {"sumsetSize": size, "bound": bound, "ok": ok}
    if which == "conjecture":
        cfg = numapps.ConjectureSearchConfig(args.n, args.m, args.k, args.trials, args.coef_range, args.seed)
        return numapps.afk_conjecture_search(cfg).to_json()
    doc = _read_input(args)
    if which == "subgraph":
        edges = [tuple(e) for e in doc["edges"]]
        return numapps.regular_subgraph_check(doc["vertices"], edges, doc.get("e0"), force=args.force).to_json()
    if which == "cube":
        R = ring_from_json(doc["ring"])
        planes = [([R.element_from_json(c) for c in h["a"]], R.element_from_json(h["b"])) for h in doc["hyperplanes"]]
        return numapps.cube_cover_check(R, planes, int(doc["n"]), force=args.force).to_json()
    if which == "cw":
        R = ring_from_json(doc["ring"])
        n = int(doc["n"])
        polys = [_poly(p, R, n) for p in doc.get("polys", [])]
        return {"count": numapps.chevalley_warning_count(R, polys, n, force=args.force, jobs=args.jobs),
                "characteristic": R.characteristic}
    if which == "olson":
        Z = Integers()
        grid = Grid(Z, doc["axes"], max_points=None if args.force else args.max_grid_points)
        polys = [_poly(p, Z, grid.n) for p in doc["polys"]]
        return numapps.olson_generalized(polys, doc["ks"], grid, int(doc["p"])).to_json()
    raise UsageError(f"unknown check {which!r}")


def cmd_selftest(args) -> dict:
    from .acceptance import run_all

    results = run_all(stream=sys.stderr)
    failed = [r.name for r in results if not r.passed]
    out = {"passed": not failed, "criteria": [r.to_json() for r in results]}
    if failed:
        raise _SelftestFailed(out)
    return out


class _SelftestFailed(Exception):
    def __init__(self, payload):
        super().__init__("selftest failed")
        self.payload = payload


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="infile", metavar="FILE", help="JSON input file (default: stdin)")
    common.add_argument("--max-grid-points", type=int, default=DEFAULT_MAX_GRID_POINTS)
    common.add_argument("--force", action="store_true", help="lift size guards")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for grid scans")

    parser = argparse.ArgumentParser(prog="nullkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    simple = {
        "grid-info": cmd_grid_info,
        "interpolate": cmd_interpolate,
        "invert": cmd_invert,
        "trim": cmd_trim,
        "certify": cmd_certify,
        "permanent": cmd_permanent,
        "alon-tarsi": cmd_alon_tarsi,
        "solve-check": cmd_solve_check,
        "solve-construct": cmd_solve_construct,
        "selftest": cmd_selftest,
    }
    for name, fn in simple.items():
        sub.add_parser(name, parents=[common]).set_defaults(func=fn)

    p = sub.add_parser("coeff", parents=[common])
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--main", action="store_true", help="coefficient of X^d (default)")
    mode.add_argument("--general", action="store_true", help="coefficient of X^e for d-leading e")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("check", parents=[common])
    checks = p.add_subparsers(dest="which", required=True)
    for name in ("subgraph", "cube", "cw", "olson"):
        checks.add_parser(name, parents=[common]).set_defaults(func=cmd_check)
    q = checks.add_parser("zm", parents=[common])
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--n", type=int, default=1)
    q.add_argument("--poly", help='univariate polynomial such as "X^3+X+2"')
    q.set_defaults(func=cmd_check)
    q = checks.add_parser("padic", parents=[common])
    q.add_argument("--y", type=int, required=True)
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.set_defaults(func=cmd_check)
    q = checks.add_parser("cd", parents=[common])
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--A", type=int, nargs="+", required=True)
    q.add_argument("--B", type=int, nargs="+", required=True)
    q.set_defaults(func=cmd_check)
    q = checks.add_parser("conjecture", parents=[common])
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--trials", type=int, default=1000)
    q.add_argument("--coef-range", type=int, default=2)
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if args.jobs < 1:
        print("nullkit: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = args.func(args)
    except _SelftestFailed as exc:
        print(_dump(exc.payload))
        return EXIT_THEOREM
    except TheoremViolated as exc:
        print(f"nullkit: {exc}", file=sys.stderr)
        return EXIT_THEOREM
    except DomainError as exc:
        print(f"nullkit: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (UsageError, KeyError, TypeError) as exc:
        msg = f"missing field {exc}" if isinstance(exc, KeyError) else str(exc)
        print(f"nullkit: usage: {msg}", file=sys.stderr)
        return EXIT_USAGE
    print(_dump(result))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
