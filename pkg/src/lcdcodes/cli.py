"""Command-line interface.

Payloads (CSV or JSON, UTF-8, LF) go to stdout or --out; the tool version,
the fully resolved parameter set, and a machine-parseable run report go to
stderr, so identical commands yield byte-identical payloads.

Exit codes: 0 success, 1 input/usage-level errors raised by the library,
2 argument parsing, 3 nonexistence proven (lcdify exhaustive), 4 budget
exhausted / inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import __version__, agcodes, bounds, codes, kernels, lcdify
from .gf2m import GF2m, FieldError, element_hex

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NONEXISTENCE = 3
EXIT_INCONCLUSIVE = 4


def _f9(x: float) -> float:
    return float(f"{x:.9g}")


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(obj, out_path: str | None) -> None:
    _emit(json.dumps(obj, indent=2) + "\n", out_path)


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lcdcodes")
    p.add_argument("--version", action="version", version=f"lcdcodes {__version__}")
    sub = p.add_subparsers(dest="verb", required=True)

    b = sub.add_parser("bounds", help="GV/TV rate grid for a field size")
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--grid", type=int, default=10000)
    b.add_argument("--format", choices=["csv", "json"], default="csv")
    b.add_argument("--out")

    c = sub.add_parser("crossover", help="delta-intervals where certified LCD codes beat GV")
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--precision", type=float, default=1e-6)
    c.add_argument("--grid", type=int, default=10000)
    c.add_argument("--out")

    ag = sub.add_parser("ag", help="one-point algebraic geometry codes")
    ag_sub = ag.add_subparsers(dest="mode", required=True)
    h = ag_sub.add_parser("hermitian", help="Hermitian-curve code over GF(r^2)")
    h.add_argument("--r", type=int, required=True)
    h.add_argument("--m", type=int, required=True)
    h.add_argument("--out")
    rs = ag_sub.add_parser("rs", help="Reed-Solomon code (rational curve)")
    rs.add_argument("--q", type=int, required=True)
    rs.add_argument("--n", type=int, required=True)
    rs.add_argument("--m", type=int, required=True)
    rs.add_argument("--out")
    info = ag_sub.add_parser("info", help="parameters of a construction")
    info.add_argument("--family", choices=["hermitian", "rs"], required=True)
    info.add_argument("--r", type=int)
    info.add_argument("--q", type=int)
    info.add_argument("--n", type=int)
    info.add_argument("--m", type=int, required=True)
    info.add_argument("--distance-budget", type=int, default=codes.DEFAULT_DISTANCE_BUDGET)
    info.add_argument("--threads", type=int, default=1)
    info.add_argument("--out")

    co = sub.add_parser("code", help="operations on code files")
    co_sub = co.add_subparsers(dest="mode", required=True)
    ci = co_sub.add_parser("info", help="validate and describe a code file")
    ci.add_argument("codefile")
    ci.add_argument("--distance-budget", type=int, default=codes.DEFAULT_DISTANCE_BUDGET)
    ci.add_argument("--threads", type=int, default=1)
    ci.add_argument("--out")

    lc = sub.add_parser("lcdify", help="find a rescaling making the code LCD")
    lc.add_argument("codefile")
    lc.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    lc.add_argument("--seed", type=int)
    lc.add_argument("--max-iters", type=int, default=1000)
    lc.add_argument("--threads", type=int, default=1)
    lc.add_argument("--out")

    au = sub.add_parser("audit", help="counting and union-bound audits")
    au_sub = au.add_subparsers(dest="mode", required=True)
    ac = au_sub.add_parser("counting", help="per-support count bounds for code and dual")
    ac.add_argument("codefile")
    ac.add_argument("--lambda", dest="ratio", required=True,
                    help="genus-to-length ratio bound (rational like 1/8, or decimal)")
    ac.add_argument("--subset-budget", type=int, default=1 << 20)
    ac.add_argument("--seed", type=int, default=0)
    ac.add_argument("--out")
    un = au_sub.add_parser("union", help="exact union of bad scaling vectors")
    un.add_argument("codefile")
    un.add_argument("--out")

    return p


def _field_for_q(q: int) -> GF2m:
    if q < 2 or q & (q - 1):
        raise FieldError(f"q={q} is not a power of 2")
    return GF2m(q.bit_length() - 1)


def _cmd_bounds(args) -> int:
    rows = bounds.bound_grid(args.q, args.grid)
    if args.format == "csv":
        lines = ["delta,gv_rate,tv_rate,window1,window2"]
        for d, gv, tv, w1, w2 in rows:
            lines.append(f"{d:.9g},{gv:.9g},{tv:.9g},"
                         f"{str(w1).lower()},{str(w2).lower()}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit_json({
            "q": args.q,
            "rows": [[_f9(d), _f9(gv), _f9(tv), w1, w2]
                     for d, gv, tv, w1, w2 in rows],
        }, args.out)
    return EXIT_OK


def _cmd_crossover(args) -> int:
    prof = bounds.crossover_intervals(args.q, args.precision, args.grid)
    def iv(t):
        return None if t is None else [_f9(t[0]), _f9(t[1])]
    _emit_json({
        "q": prof.q,
        "precision": _f9(args.precision),
        "genus_ratio": [prof.genus_ratio.numerator, prof.genus_ratio.denominator],
        "crossover_1": iv(prof.crossover_1),
        "crossover_2": iv(prof.crossover_2),
    }, args.out)
    return EXIT_OK


def _hermitian_code(r: int, m: int):
    field = _field_for_q(r * r)
    curve = agcodes.hermitian_curve(r)
    places = agcodes.hermitian_places(r, field)
    return field, curve, places, agcodes.build_code(field, curve, places, m)


def _rs_code(q: int, n: int, m: int):
    field = _field_for_q(q)
    curve = agcodes.rational_curve()
    places = agcodes.rational_places(field, n)
    return field, curve, places, agcodes.build_code(field, curve, places, m)


def _cmd_ag(args) -> int:
    if args.mode == "hermitian":
        _, _, _, code = _hermitian_code(args.r, args.m)
        _emit(codes.to_text(code), args.out)
        return EXIT_OK
    if args.mode == "rs":
        _, _, _, code = _rs_code(args.q, args.n, args.m)
        _emit(codes.to_text(code), args.out)
        return EXIT_OK
    # info
    if args.family == "hermitian":
        if args.r is None:
            raise ValueError("ag info --family hermitian requires --r")
        field, curve, places, code = _hermitian_code(args.r, args.m)
    else:
        if args.q is None or args.n is None:
            raise ValueError("ag info --family rs requires --q and --n")
        field, curve, places, code = _rs_code(args.q, args.n, args.m)
    g = curve.genus
    payload = {
        "family": args.family,
        "field": field.serialize(),
        "n": code.n,
        "k": code.k,
        "genus": g,
        "designed_distance_lower": code.n - args.m,
    }
    if 2 * g - 2 < args.m < code.n:
        dp = agcodes.designed_parameters(code.n, args.m, g)
        payload["dual_k"] = dp.k_dual
        payload["dual_distance_lower"] = dp.d_dual_lower
    if field.q**code.k <= args.distance_budget:
        payload["min_distance"] = codes.min_distance(
            code, args.distance_budget, args.threads)
    else:
        payload["min_distance"] = None
    _emit_json(payload, args.out)
    return EXIT_OK


def _cmd_code(args) -> int:
    code = codes.parse_code_file(args.codefile)
    payload = {
        "field": code.field.serialize(),
        "n": code.n,
        "k": code.k,
        "hull_dimension": codes.hull_dimension(code),
        "is_lcd": codes.is_lcd(code),
    }
    if code.k >= 1 and code.field.q**code.k <= args.distance_budget:
        payload["min_distance"] = codes.min_distance(
            code, args.distance_budget, args.threads)
    else:
        payload["min_distance"] = None
    _emit_json(payload, args.out)
    return EXIT_OK


def _cmd_lcdify(args) -> int:
    code = codes.parse_code_file(args.codefile)
    if args.mode == "random" and args.seed is None:
        raise ValueError("--mode random requires --seed")
    try:
        cert = lcdify.find_lcd_scaling(code, args.mode, args.seed,
                                       args.max_iters, args.threads)
    except lcdify.NoScalingError as exc:
        _emit_json({"error": "nonexistence", "detail": str(exc)}, args.out)
        return EXIT_NONEXISTENCE
    except lcdify.SearchInconclusiveError as exc:
        _emit_json({"error": "inconclusive", "detail": str(exc)}, args.out)
        return EXIT_INCONCLUSIVE
    if not codes.is_lcd(codes.scale_code(cert.a, code)):
        raise AssertionError("certificate failed final re-verification")
    _emit_json({
        "a": [element_hex(x) for x in cert.a],
        "mode": cert.mode,
        "iterations": cert.iterations,
        "verified": cert.verified,
    }, args.out)
    return EXIT_OK


def _cmd_audit(args) -> int:
    code = codes.parse_code_file(args.codefile)
    if args.mode == "counting":
        ratio = Fraction(args.ratio)
        audit = lcdify.audit_support_counts(code, ratio, args.subset_budget,
                                            seed=args.seed)
        lines = ["I,w,s_count,s_dual_count,bound_ok"]
        for rep in audit.reports:
            both = (rep.ok is True) and (rep.ok_dual is True)
            flag = ("indeterminate" if rep.ok is None or rep.ok_dual is None
                    else str(both).lower())
            lines.append(f"{rep.mask:x},{rep.w},{rep.s_count},"
                         f"{rep.s_dual_count},{flag}")
        _emit("\n".join(lines) + "\n", args.out)
        print(f"# all_ok={str(audit.all_ok).lower()} "
              f"exhaustive={str(audit.exhaustive).lower()}", file=sys.stderr)
        return EXIT_OK
    # union
    try:
        rep = lcdify.audit_scaling_union(code)
    except codes.EnumerationBudgetError as exc:
        _emit_json({"error": "budget", "detail": str(exc)}, args.out)
        return EXIT_INCONCLUSIVE
    _emit_json({
        "union_size": rep.union_size,
        "sum_blocking": rep.sum_blocking,
        "total": rep.total,
        "holds": rep.holds,
        "slack": rep.slack,
    }, args.out)
    return EXIT_OK


_DISPATCH = {
    "bounds": _cmd_bounds,
    "crossover": _cmd_crossover,
    "ag": _cmd_ag,
    "code": _cmd_code,
    "lcdify": _cmd_lcdify,
    "audit": _cmd_audit,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    resolved = {k: v for k, v in vars(args).items()}
    print(f"lcdcodes {__version__} (backend: {kernels.BACKEND})", file=sys.stderr)
    print(f"# params: {json.dumps(resolved, default=str, sort_keys=True)}",
          file=sys.stderr)
    t0 = time.perf_counter()
    try:
        status = _DISPATCH[args.verb](args)
    except (FieldError, codes.CodeFormatError, codes.RankDeficientError,
            ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        status = EXIT_ERROR
    except codes.EnumerationBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        status = EXIT_INCONCLUSIVE
    wall = time.perf_counter() - t0
    report = {
        "command": argv if argv is not None else sys.argv[1:],
        "wall_time_s": round(wall, 6),
        "seed": getattr(args, "seed", None),
        "exit": status,
    }
    print(f"# run: {json.dumps(report, default=str)}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
