"""Command line front end. CSV on stdout by default, JSON with --json.

Exit codes: 0 success, 1 usage error, 2 verification failure.
Column layouts are listed in SCHEMA.md.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import asymptotics, dirichlet, expsum, formula, lattice, omega
from .lattice import ParaboloidSpec, RatQuadForm

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, float):
        return f"{v:.6f}"
    if isinstance(v, Fraction):
        return str(v)
    if v is None:
        return ""
    return str(v)


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    return v


class Table:
    def __init__(self, columns: Sequence[str]):
        self.columns = list(columns)
        self.rows: List[list] = []

    def add(self, *values):
        if len(values) != len(self.columns):
            raise ValueError("row width mismatch")
        self.rows.append(list(values))

    def write(self, out, as_json: bool):
        if as_json:
            payload = [dict(zip(self.columns, map(_jsonable, r))) for r in self.rows]
            json.dump(payload, out, indent=2)
            out.write("\n")
            return
        w = csv.writer(out, lineterminator="\n")
        w.writerow(self.columns)
        for r in self.rows:
            w.writerow([_fmt(v) for v in r])


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


def _rational_list(text: str) -> List[Fraction]:
    return [_rational(t) for t in text.split(",") if t.strip()]


def _int_list(text: str) -> List[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ":" in part:
            bits = [int(b) for b in part.split(":")]
            lo, hi = bits[0], bits[1]
            step = bits[2] if len(bits) > 2 else 1
            out.extend(range(lo, hi + 1, step))
        else:
            out.append(int(part))
    return out


def _form(text: Optional[str], k: int) -> RatQuadForm:
    if text is None:
        return RatQuadForm.identity(k)
    try:
        return RatQuadForm.from_upper(_rational_list(text), dim=k)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _spec(args) -> ParaboloidSpec:
    k = args.dim - 1
    Q = _form(args.q, k)
    beta = ()
    if args.beta:
        parts = args.beta.split(",")
        if args.beta_exact:
            beta = tuple(_rational(p) for p in parts)
        else:
            beta = tuple(float(p) for p in parts)
    try:
        return ParaboloidSpec(args.dim, Q, beta, _rational(args.c))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _add_region_args(p):
    p.add_argument("--dim", type=int, default=2, help="dimension d >= 2")
    p.add_argument("--q", help="upper triangle of the form matrix, 'a11,a12,...,a22,...' (p/q allowed)")
    p.add_argument("--c", default="1", help="height c (rational)")
    p.add_argument("--beta", help="comma-separated shift; decimals run the float path")
    p.add_argument("--beta-exact", action="store_true", help="parse --beta as exact rationals")


# ---------------------------------------------------------------------------
# subcommands


def cmd_count(args) -> Table:
    spec = _spec(args)
    count, ambiguous = lattice.count_paraboloid_detailed(spec, args.r)
    if spec.beta_is_rational:
        t = Table(["count"])
        t.add(count)
    else:
        t = Table(["count", "ambiguous"])
        t.add(count, ambiguous)
    return t


def cmd_formula(args) -> Table:
    t = Table(["n", "error", "error_exact", "count", "method"])
    for n in args.n:
        if args.method == "exact":
            E = formula.error_term_exact(n)
        elif args.method == "cor-4k1":
            E = formula.error_term_cor_4k1(n)
        else:
            E = formula.error_term_cor_sqfree(n)
        count = E + formula.PARABOLA_AREA * n * n
        t.add(n, float(E), E, int(count), args.method)
    return t


def cmd_verify(args):
    mismatches = formula.verify_formula_range(args.max, jobs=args.jobs)
    t = Table(["field", "value"])
    t.add("n_max", args.max)
    t.add("checked", len(range(1, args.max + 1, 2)))
    t.add("mismatches", len(mismatches))
    for m in mismatches:
        t.add("mismatch", f"{m.N}:{m.delta}")
    return t, (EXIT_FAIL if mismatches else EXIT_OK)


def cmd_classnum(args) -> Table:
    t = Table(["d", "class_number", "forms"])
    for d in args.d:
        h = dirichlet.class_number(d)
        forms = ";".join(f"{f.a}:{f.b}:{f.c}" for f in dirichlet.reduced_forms(-d, primitive_only=True))
        t.add(d, h, forms)
    return t


def cmd_lfun(args) -> Table:
    t = Table(["d", "value", "rational_part", "rational_part_exact", "fundamental", "conductor_factor"])
    for d in args.d:
        L = dirichlet.l_value(d)
        t.add(d, L.value, float(L.rational_part), L.rational_part, L.fundamental, L.conductor_factor)
    return t


def cmd_gauss(args) -> Table:
    t = Table(["m", "n", "re", "im", "im_closed", "im_closed_coeff", "im_closed_radicand"])
    G = dirichlet.gauss_sum_direct(args.m, args.n)
    if args.n % 2:
        coeff, rad = dirichlet.gauss_sum_im_exact(args.m, args.n)
        t.add(args.m, args.n, G.real, G.imag, float(coeff) * math.sqrt(rad), coeff, rad)
    else:
        t.add(args.m, args.n, G.real, G.imag, None, None, None)
    return t


def cmd_farey(args) -> Table:
    t = Table(["x", "order", "a", "q", "lo", "lo_exact", "hi", "hi_exact"])
    x = _rational(args.x)
    arc = expsum.farey_locate(x, args.order)
    t.add(x, args.order, arc.a, arc.q, float(arc.lo), arc.lo, float(arc.hi), arc.hi)
    return t


def _summary(samples, columns=("n", "samples", "max_ratio", "mean_ratio")) -> Table:
    t = Table(list(columns))
    for N in sorted({s.N for s in samples}):
        rs = [s.ratio for s in samples if s.N == N]
        t.add(N, len(rs), max(rs), math.fsum(rs) / len(rs))
    return t


def cmd_expsum(args) -> Table:
    Q = _form(args.q, 2)
    if not Q.is_integral():
        raise UsageError("expsum needs an integral binary form")
    samples = expsum.prop31_sweep(Q, args.n, samples=args.samples, seed=args.seed)
    if args.summary:
        return _summary(samples)
    t = Table(["n", "sample", "x", "alpha", "beta", "a", "q", "abs_sum", "ratio"])
    for s in samples:
        t.add(s.N, s.index, s.x, s.alpha, s.beta, s.a, s.q, s.abs_sum, s.ratio)
    return t


def cmd_hl(args) -> Table:
    if args.x is not None:
        t = Table(["x", "n", "ratio"])
        x = _rational(args.x)
        for N in args.n:
            t.add(x, N, expsum.hl_ratio(x, N))
        return t
    samples = expsum.hl_sweep(args.n, samples=args.samples, seed=args.seed)
    if args.summary:
        return _summary(samples)
    t = Table(["n", "sample", "x", "a", "q", "abs_sum", "ratio"])
    for s in samples:
        t.add(s.N, s.index, s.x, s.a, s.q, s.abs_sum, s.ratio)
    return t


def cmd_omega(args) -> Table:
    if args.mode == "minus":
        recs = omega.omega_minus_scan(args.max, jobs=args.jobs)
        if args.top:
            recs = recs[: args.top]
        t = Table(["n", "error", "error_exact", "normalized"])
        for r in recs:
            t.add(r.N, float(r.error), r.error, r.normalized)
    elif args.mode == "plus":
        t = Table(["n", "m", "error", "error_exact", "normalized"])
        for r in omega.omega_plus_family(args.max):
            t.add(r.N, math.isqrt(r.N), float(r.error), r.error, r.normalized)
    elif args.mode == "family":
        t = Table(["x", "y"])
        for x, y in omega.boundary_family_2d(args.max):
            t.add(x, y)
    else:
        Q = _form(args.q, 2)
        Rs = [k * k for k in range(1, math.isqrt(args.max) + 1)]
        t = Table(["r", "boundary_count", "ratio"])
        for g in omega.boundary_growth_3d(Q, _rational(args.c), Rs):
            t.add(g.R, g.boundary, g.ratio)
    return t


def cmd_scan(args) -> Table:
    spec = _spec(args)
    recs = asymptotics.error_scan(spec, args.r, jobs=args.jobs)
    if args.fit:
        f = asymptotics.fit_exponent(recs)
        t = Table(["slope", "max_normalized", "p95_normalized", "used", "dropped"])
        t.add(f.slope, f.max_normalized, f.p95_normalized, f.used, f.dropped)
        return t
    t = Table(["r", "count", "volume_term", "error", "error_exact", "ambiguous"])
    for r in recs:
        t.add(r.R, r.count, r.volume_term, r.error, r.error_exact, r.ambiguous)
    return t


GLOBAL_DEFAULTS = {"json": False, "seed": 0, "jobs": 1}

COLUMNS = {
    "count": "count (plus ambiguous when beta is given as decimals)",
    "formula": "n, error, error_exact, count, method",
    "verify": "field, value (n_max, checked, mismatches, then one mismatch row per failure as n:delta)",
    "classnum": "d, class_number, forms (reduced forms a:b:c joined by ';')",
    "lfun": "d, value, rational_part, rational_part_exact, fundamental, conductor_factor",
    "gauss": "m, n, re, im, im_closed, im_closed_coeff, im_closed_radicand",
    "farey": "x, order, a, q, lo, lo_exact, hi, hi_exact",
    "expsum": "n, sample, x, alpha, beta, a, q, abs_sum, ratio; with --summary: n, samples, max_ratio, mean_ratio",
    "hl": "n, sample, x, a, q, abs_sum, ratio; with --x: x, n, ratio; with --summary: n, samples, max_ratio, mean_ratio",
    "omega": "minus: n, error, error_exact, normalized; plus: n, m, error, error_exact, normalized; "
    "family: x, y; growth: r, boundary_count, ratio",
    "scan": "r, count, volume_term, error, error_exact, ambiguous; with --fit: slope, max_normalized, "
    "p95_normalized, used, dropped",
}


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON instead of CSV")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized sweeps (default 0)")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes for scans (default 1)")

    p = _Parser(prog="paraboloid-lattice", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, **kw):
        return sub.add_parser(name, parents=[common], epilog="columns: " + COLUMNS[name], **kw)

    s = command("count", help="exact lattice count of R*P")
    _add_region_args(s)
    s.add_argument("--r", type=int, required=True)
    s.set_defaults(func=cmd_count)

    s = command("formula", help="closed-form error term of the planar parabola")
    s.add_argument("--n", type=_int_list, required=True, help="odd N values, e.g. '7' or '1:21:2'")
    s.add_argument("--method", choices=["exact", "cor-4k1", "cor-sqfree"], default="exact")
    s.set_defaults(func=cmd_formula)

    s = command("verify", help="closed form versus direct counting for odd N <= max")
    s.add_argument("--max", type=int, required=True)
    s.set_defaults(func=cmd_verify)

    s = command("classnum", help="class numbers h(-d)")
    s.add_argument("--d", type=_int_list, required=True)
    s.set_defaults(func=cmd_classnum)

    s = command("lfun", help="L(1, chi_{-d}) for d = 3 mod 4")
    s.add_argument("--d", type=_int_list, required=True)
    s.set_defaults(func=cmd_lfun)

    s = command("gauss", help="quadratic Gauss sum G(m; n)")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_gauss)

    s = command("farey", help="locate x in the Farey dissection of a given order")
    s.add_argument("--x", required=True, help="rational or decimal, read exactly")
    s.add_argument("--order", type=int, required=True)
    s.set_defaults(func=cmd_farey)

    s = command("expsum", help="seeded sweep of the elliptic theta sum ratio")
    s.add_argument("--q", default="1,0,1", help="integral binary form 'a11,a12,a22'")
    s.add_argument("--n", type=_int_list, default=[256, 512, 1024])
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--summary", action="store_true", help="one row per N with the max ratio")
    s.set_defaults(func=cmd_expsum)

    s = command("hl", help="Hardy-Littlewood ratio, at one x or over a seeded sweep")
    s.add_argument("--x", help="single evaluation point (exact rational or decimal)")
    s.add_argument("--n", type=_int_list, default=[256, 512, 1024])
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--summary", action="store_true")
    s.set_defaults(func=cmd_hl)

    s = command("omega", help="error-term witnesses and boundary growth")
    s.add_argument("--mode", choices=["minus", "plus", "family", "growth"], required=True)
    s.add_argument("--max", type=int, required=True, help="N_max, M_max, M, or R_max depending on mode")
    s.add_argument("--top", type=int, default=0, help="minus mode: keep only the first rows")
    s.add_argument("--q", default="1,0,1", help="growth mode: integral binary form")
    s.add_argument("--c", default="1", help="growth mode: height c")
    s.set_defaults(func=cmd_omega)

    s = command("scan", help="error records over a list of R, optionally fitted")
    _add_region_args(s)
    s.add_argument("--r", type=_int_list, required=True, help="R values, e.g. '16:256' or '3:501:2'")
    s.add_argument("--fit", action="store_true", help="print the log-log fit instead of the records")
    s.set_defaults(func=cmd_scan)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    # set_defaults would leak into the shared parent actions, so fill globals here
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    try:
        result = args.func(args)
    except (UsageError, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except lattice.AmbiguousCountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    result.write(out, args.json)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
