"""Command-line front end: exact moments, identity verification, genus tables.

Exit codes: 0 success / all identities equal, 1 verification found
discrepancies (or a genus row failed its cross-check), 2 usage errors,
guardrail violations, and poles.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .exactq import PoleError, Scalar, evaluate_at, q_factorial
from .moments import (
    GENUS_MAX_M,
    DegenerateDenominator,
    gaussian_moment,
    genus_table,
    hermite_squared_moment,
    hook_moment_closed_form,
    integrate_schur,
    integrate_symmetric,
    normalization,
    p2m_closed_form,
    theorem5_rhs,
)
from .symschur import (
    Partition,
    ShapeError,
    SizeError,
    apply_M2,
    power_sum_monomials,
    power_sum_vector,
)
from .verify import (
    SUITE_NAMES,
    has_discrepancies,
    render_json,
    summary_table,
    verify_suite,
)

CLOSED_FORM_BANNER = (
    "warning: closed-form evaluators are unverified transcriptions of printed "
    "formulas; run the verify command for their discrepancy status"
)


def _json_dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _render_value(value, args, query) -> str:
    """Render a Scalar (or its specialization at q0) in the chosen format."""
    if args.at_q is not None:
        value = evaluate_at(value, args.at_q)
        text = str(value)
        latex = str(value)
    else:
        text = str(value)
        latex = value.latex()
    if args.format == "json":
        return _json_dump({"query": query, "value": text})
    if args.format == "latex":
        return latex + "\n"
    return text + "\n"


def _parse_int_pair(text: str, flag: str):
    try:
        a, b = (int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{flag} expects two comma-separated integers")
    return a, b


def cmd_moment(args) -> int:
    n_vars = args.n_vars
    query = {"n_vars": n_vars, "method": args.method, "format": args.format}
    if args.at_q is not None:
        query["at_q"] = str(args.at_q)
    if args.method == "closed":
        print(CLOSED_FORM_BANNER, file=sys.stderr)

    if args.hermite_sq is not None:
        m, s = args.hermite_sq
        query.update({"kind": "hermite_squared", "m": m, "s": s})
        if args.method == "closed":
            value = theorem5_rhs(m, s) * Scalar.q_power(s * (s + 1) // 2) * q_factorial(s + 1)
        else:
            value = hermite_squared_moment(m, s)
        return _emit(value, args, query)

    if args.power_sum is not None:
        if args.power_sum <= 0 or args.power_sum % 2:
            print("error: --power-sum expects a positive even integer", file=sys.stderr)
            return 2
        m = args.power_sum // 2
        query.update({"kind": "power_sum", "degree": 2 * m})
        if args.method == "closed":
            value = p2m_closed_form(m, n_vars)
        elif args.method == "oracle":
            value = apply_M2(power_sum_monomials(m, n_vars), gaussian_moment) / normalization(n_vars)
        else:
            value = integrate_symmetric(power_sum_vector(m, n_vars))
        return _emit(value, args, query)

    kappa = Partition.from_string(args.schur)
    query.update({"kind": "schur", "partition": str(kappa)})
    if args.method == "closed":
        parts = kappa.parts
        if not parts or any(p != 1 for p in parts[1:]) or kappa.weight % 2:
            print(
                "error: --method closed needs a hook partition of even weight",
                file=sys.stderr,
            )
            return 2
        value = hook_moment_closed_form(parts[0] - 1, kappa.weight // 2, n_vars)
    else:
        value = integrate_schur(kappa, n_vars, args.method)
    return _emit(value, args, query)


def _emit(value, args, query) -> int:
    sys.stdout.write(_render_value(value, args, query))
    return 0


def cmd_verify(args) -> int:
    suites = args.suite or ["all"]
    results = verify_suite(
        suites,
        max_weight=args.max_weight,
        max_vars=args.max_vars,
        max_n=args.max_n,
    )
    text = render_json(results)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
    if args.format == "json":
        sys.stdout.write(text)
    else:
        print(summary_table(results))
        if args.report:
            print(f"report written to {args.report}")
    return 1 if has_discrepancies(results) else 0


def cmd_table(args) -> int:
    if not args.harer_zagier:
        print("error: table requires --harer-zagier", file=sys.stderr)
        return 2
    rows = genus_table(args.max_m)
    if args.format == "json":
        obj = [
            {
                "m": r.m,
                "coefficients": {str(g): c for g, c in sorted(r.coefficients.items())},
                "pairing": {str(g): c for g, c in sorted(r.pairing.items())},
                "match": r.matches,
            }
            for r in rows
        ]
        sys.stdout.write(_json_dump(obj))
    elif args.format == "latex":
        print(r"\begin{tabular}{rlll}")
        print(r"m & counts by genus & pairing oracle & match \\")
        for r in rows:
            coeffs = ",".join(str(r.coefficients[g]) for g in sorted(r.coefficients))
            oracle = ",".join(str(r.pairing[g]) for g in sorted(r.pairing))
            ok = "yes" if r.matches else "no"
            print(f"{r.m} & {coeffs} & {oracle} & {ok} " + r"\\")
        print(r"\end{tabular}")
    else:
        fmt = "{:>3} {:>24} {:>24} {:>9}"
        print(fmt.format("m", "coefficients (g=0,1,..)", "pairing oracle", "match"))
        for r in rows:
            coeffs = ",".join(str(r.coefficients[g]) for g in sorted(r.coefficients))
            oracle = ",".join(str(r.pairing[g]) for g in sorted(r.pairing))
            print(fmt.format(r.m, coeffs, oracle, "match" if r.matches else "MISMATCH"))
    return 0 if all(r.matches for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgue",
        description="exact q-deformed GUE moments and printed-identity verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moment", help="compute one exact moment")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--schur", metavar="PARTS", help='Schur moment, e.g. "3,1"')
    what.add_argument("--power-sum", type=int, metavar="2M", help="power-sum moment p_{2m}")
    what.add_argument(
        "--hermite-sq",
        type=lambda t: _parse_int_pair(t, "--hermite-sq"),
        metavar="M,S",
        help="univariate moment of x^(2m) H_s^2",
    )
    p.add_argument("--n-vars", type=int, default=1, metavar="N", help="number of variables")
    p.add_argument("--method", choices=("fast", "oracle", "closed"), default="fast")
    p.add_argument("--at-q", type=Fraction, default=None, metavar="RAT", help="evaluate at q = RAT")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.set_defaults(func=cmd_moment)

    p = sub.add_parser("verify", help="compare printed identities against oracles")
    p.add_argument(
        "--suite",
        action="append",
        choices=("all",) + SUITE_NAMES,
        help="suite to run (repeatable; default all)",
    )
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--max-vars", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--report", metavar="FILE", help="write the JSON report here")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="one-face map counts by genus at q = 1")
    p.add_argument("--harer-zagier", action="store_true", help="emit the genus table")
    p.add_argument("--max-m", type=int, default=3, metavar="M", help=f"rows (M <= {GENUS_MAX_M})")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SizeError, ShapeError, PoleError, DegenerateDenominator, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
