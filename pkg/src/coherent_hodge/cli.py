"""Command-line front end.

Exit status: 0 on success, 1 if ``verify`` finds a failing identity, 2 for
usage errors and for parameters outside the range of any known result.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .arith import BiPoly, as_rational, format_latex, format_plain, to_json_obj
from .classify import birational_type, birational_type_count_bound, classify_isomorphism
from .errors import HodgeError
from .moduli import ModuliQuery, StratumId, hodge, hodge_g0_gcd2, hodge_stratum
from .verify import DEEP_MAX_D, DEFAULT_MAX_A, DEFAULT_MAX_D, run_suite
from .walls import CriticalValue, critical_values

ENV_MAX_D = "COHERENT_HODGE_MAX_D"
ENV_MAX_A = "COHERENT_HODGE_MAX_A"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def render(p: BiPoly, fmt: str) -> str:
    if fmt == "latex":
        return format_latex(p)
    if fmt == "json":
        return json.dumps(to_json_obj(p))
    return format_plain(p)


def render_scalar(x: Fraction, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"value": str(x)})
    if fmt == "latex" and x.denominator != 1:
        sign = "-" if x < 0 else ""
        return f"{sign}\\frac{{{abs(x.numerator)}}}{{{x.denominator}}}"
    return str(x)


def _chamber(text: str):
    if text in ("0+", "small"):
        return None
    try:
        i = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"chamber must be '0+' or a nonnegative integer, got {text!r}")
    if i < 0:
        raise argparse.ArgumentTypeError(f"chamber must be nonnegative, got {i}")
    return i


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")


# -- commands ----------------------------------------------------------------------


def cmd_hodge(args) -> str:
    q = ModuliQuery(args.n, args.d, args.k, args.fixed_det, args.chamber)
    p = hodge(q)
    if args.poincare:
        return render(p.specialize_v_to_u(), args.format)
    if args.euler:
        return render_scalar(p(-1, -1), args.format)
    if args.at is not None:
        return render_scalar(p(*args.at), args.format)
    return render(p, args.format)


def cmd_strata(args) -> str:
    if args.d < 2 or args.d % 2:
        raise UsageError("d must be even")
    q = ModuliQuery(2, args.d, 1, args.fixed_det)
    parts = {s.name.lower(): hodge_stratum(q, s) for s in StratumId}
    total = hodge_g0_gcd2(q)
    if args.format == "json":
        return json.dumps(
            {
                "d": args.d,
                "fixed_det": args.fixed_det,
                "strata": {name: to_json_obj(p) for name, p in parts.items()},
                "sum": to_json_obj(total),
            }
        )
    lines = [f"{name}: {render(p, args.format)}" for name, p in parts.items()]
    lines.append(f"sum: {render(total, args.format)}")
    return "\n".join(lines)


def critical_values_to_json(rows: list[CriticalValue], d: int, a: int) -> str:
    return json.dumps({"d": d, "a": a, "critical_values": [c.as_dict() for c in rows]})


def critical_values_from_json(text: str) -> list[CriticalValue]:
    obj = json.loads(text)
    return [
        CriticalValue(
            alpha=Fraction(r["alpha"]), index=r["i"], d1=r["d1"], d2=r["d2"], n1=r["n1"], n2=r["n2"]
        )
        for r in obj["critical_values"]
    ]


def cmd_critical_values(args) -> str:
    if args.d < 1 or args.a < 0:
        raise UsageError("need d >= 1 and a >= 0")
    rows = critical_values(args.d, args.a)
    if args.format == "json":
        return critical_values_to_json(rows, args.d, args.a)
    if args.format == "latex":
        body = [r"\begin{tabular}{rrrrr}", r"$i$ & $d_1$ & $n_1$ & $n_2$ & $\alpha_i$ \\ \hline"]
        for c in rows:
            alpha = render_scalar(c.alpha, "latex")
            body.append(f"{c.index} & {c.d1} & {c.n1} & {c.n2} & ${alpha}$ \\\\")
        body.append(r"\end{tabular}")
        return "\n".join(body)
    lines = [f"{'i':>3} {'d1':>4} {'n1':>4} {'n2':>4}  alpha"]
    for c in rows:
        lines.append(f"{c.index:>3} {c.d1:>4} {c.n1:>4} {c.n2:>4}  {c.alpha}")
    return "\n".join(lines)


def _verify_bounds(args) -> tuple[int, int]:
    max_d = int(os.environ.get(ENV_MAX_D, DEFAULT_MAX_D))
    max_a = int(os.environ.get(ENV_MAX_A, DEFAULT_MAX_A))
    if args.deep:
        max_d = DEEP_MAX_D
    if args.max_d is not None:
        max_d = args.max_d
    if args.max_a is not None:
        max_a = args.max_a
    if max_d < 2:
        raise UsageError(f"max-d must be >= 2, got {max_d}")
    if max_a < 0:
        raise UsageError(f"max-a must be >= 0, got {max_a}")
    return max_d, max_a


def cmd_verify(args) -> tuple[str, int]:
    max_d, max_a = _verify_bounds(args)
    results = run_suite(max_d, max_a)
    lines = [f"verify: max-d {max_d}, max-a {max_a}"]
    lines += [r.line() for r in results]
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed} passed, {failed} failed")
    return "\n".join(lines), EXIT_FAIL if failed else EXIT_OK


def cmd_classify(args) -> str:
    if args.n2 is not None:
        c = classify_isomorphism(args.n, args.n2, args.d, args.k)
        if args.format == "json":
            return json.dumps({"verdict": c.verdict.value, "reason": c.reason})
        return str(c)
    b = birational_type(args.n, args.d, args.k, args.fixed_det)
    bound = birational_type_count_bound(args.d)
    if args.format == "json":
        return json.dumps(
            {
                "kind": b.kind.value,
                "dim": b.dim,
                "h": b.h,
                "description": b.describe(),
                "reason": b.reason,
                "k1_birational_type_bound": bound,
            }
        )
    return (
        f"{b.describe()} ({b.reason})\n"
        f"at most {bound} birational types of G(alpha; n, {args.d}, 1) over all n and alpha"
    )


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coherent-hodge",
        description="Hodge polynomials of moduli of coherent systems on an elliptic curve.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("plain", "latex", "json"), default="plain")

    p = sub.add_parser("hodge", help="Hodge polynomial of a moduli space")
    p.add_argument("--n", type=int, required=True, help="rank")
    p.add_argument("--d", type=int, required=True, help="degree")
    p.add_argument("--k", type=int, default=1, help="number of sections (default 1)")
    p.add_argument("--fixed-det", action="store_true", help="fix the determinant")
    p.add_argument("--chamber", type=_chamber, default=None, help="'0+' (default) or chamber index i")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--poincare", action="store_true", help="substitute v = u")
    mode.add_argument("--euler", action="store_true", help="evaluate at u = v = -1")
    mode.add_argument("--at", nargs=2, type=_rational, metavar=("U0", "V0"), help="evaluate at (U0, V0)")
    add_format(p)
    p.set_defaults(func=cmd_hodge)

    p = sub.add_parser("strata", help="strata of G_0(n, d, 1) for gcd(n, d) = 2")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--fixed-det", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("critical-values", help="walls for type (2 + a d, d, 1)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--a", type=int, default=0)
    add_format(p)
    p.set_defaults(func=cmd_critical_values)

    p = sub.add_parser("verify", help="run the identity suite")
    p.add_argument("--max-d", type=int, default=None, help=f"default {DEFAULT_MAX_D} (env {ENV_MAX_D})")
    p.add_argument("--max-a", type=int, default=None, help=f"default {DEFAULT_MAX_A} (env {ENV_MAX_A})")
    p.add_argument("--deep", action="store_true", help=f"max-d {DEEP_MAX_D}")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="isomorphism verdict (with --n2) or birational type")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--n2", type=int, default=None, help="second rank to compare against")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--fixed-det", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except (HodgeError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    status = EXIT_OK
    if isinstance(out, tuple):
        out, status = out
    print(out)
    return status


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
