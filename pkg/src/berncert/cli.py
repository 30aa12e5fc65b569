"""Command-line front end.

Exit codes: 0 success (CERTIFIED / no FAIL), 1 negative outcome
(NOT_CERTIFIED / some FAIL / a failed bound), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from . import __version__
from .bernoulli import EXACT_THRESHOLD, bernoulli_exact, bernoulli_mod
from .checker import ConditionReport, check_theorem
from .expr import format_expr
from .families import FamilyFileError, load_family
from .numeric import INF
from .verifier import DEFAULT_GUARD, Status, VerificationReport, verify_range
from .zeta import BoundReport, BoundStatus, check_bounds, estimate_coeffs


class UsageError(Exception):
    pass


def _val(v) -> Any:
    return "inf" if v == INF else v


def check_to_json(report: ConditionReport) -> dict[str, Any]:
    return {
        "family": report.family.name,
        "N": report.family.N,
        "verdict": report.verdict.value,
        "M": _val(report.M),
        "checks": [
            {
                "condition": c.condition,
                "class_k": c.class_k,
                "m": c.m,
                "computed_vt": _val(c.computed_vt),
                "required": c.required,
                "pass": c.passed,
                "expression": format_expr(c.expression),
            }
            for c in report.checks
        ],
        "threshold_estimate": report.threshold_estimate,
        "notes": list(report.notes),
    }


def check_to_text(report: ConditionReport) -> str:
    fam = report.family
    lines = [f"family: {fam.name or '(unnamed)'}   N = {fam.N}   M = {_val(report.M)}"]
    lines.append(f"{'cond':>4} {'k':>4} {'m':>3} {'v_t':>5} {'need':>5}  result  expression")
    for c in report.checks:
        k = "-" if c.class_k is None else str(c.class_k)
        m = "-" if c.m is None else str(c.m)
        res = "ok" if c.passed else "FAIL"
        lines.append(
            f"{c.condition:>4} {k:>4} {m:>3} {str(_val(c.computed_vt)):>5} {c.required:>5}  {res:<6}  {format_expr(c.expression)}"
        )
    lines.append(f"verdict: {report.verdict.value}")
    if report.threshold_estimate is not None:
        lines.append(f"threshold estimate (heuristic): p >= {report.threshold_estimate}")
    lines.extend(f"note: {n}" for n in report.notes)
    return "\n".join(lines)


def verify_to_json(report: VerificationReport) -> dict[str, Any]:
    rows = []
    for r in report.prime_results:
        if r.observed_valuation is None:
            obs: Any = None
        else:
            obs = f">={r.observed_valuation}" if r.at_least else r.observed_valuation
        rows.append(
            {
                "p": r.p,
                "status": r.status.value,
                "observed_valuation": obs,
                "precision_used": r.precision_used,
                "reason": r.reason,
            }
        )
    return {
        "family": report.family.name,
        "N": report.family.N,
        "guard": report.guard,
        "prime_results": rows,
        "summary": report.summary,
    }


def verify_to_text(report: VerificationReport) -> str:
    lines = [f"family: {report.family.name or '(unnamed)'}   N = {report.family.N}   guard = {report.guard}"]
    lines.append(f"{'p':>6}  {'status':<13} {'v_p':>5}  {'prec':>4}")
    for r in report.prime_results:
        status = r.status.value + (f" ({r.reason})" if r.reason else "")
        lines.append(f"{r.p:>6}  {status:<13} {r.valuation_text():>5}  {r.precision_used:>4}")
    s = report.summary
    lines.append(
        f"{s['pass']}/{s['tested']} PASS, {s['fail']} FAIL, "
        f"{s['indeterminate']} indeterminate, {s['skipped']} skipped"
    )
    return "\n".join(lines)


def bounds_to_json(report: BoundReport) -> dict[str, Any]:
    return {
        "p": report.p,
        "degree": report.degree,
        "classes": {
            str(k): {
                "certified_prec": est.certified_prec,
                "coeffs": [_padic_json(c) for c in est.coeffs],
            }
            for k, est in report.estimates.items()
        },
        "checks": [
            {
                "k": c.k,
                "i": c.i,
                "statement": c.statement,
                "required": c.required,
                "status": c.status.value,
            }
            for c in report.checks
        ],
    }


def _padic_json(x) -> dict[str, Any]:
    return {"p": x.p, "v_min": x.v_min, "r": x.r, "prec_abs": x.prec_abs, "zero": x.is_zero}


def _padic_text(x) -> str:
    if x.is_zero:
        return f"O({x.p}^{x.prec_abs})"
    return f"{x.p}^{x.v_min} * {x.r} + O({x.p}^{x.prec_abs})"


def _parse_primes(spec: str) -> tuple[int, int]:
    try:
        a, b = spec.split(":")
        lo, hi = int(a), int(b)
    except ValueError:
        raise UsageError(f"--primes expects A:B, got {spec!r}") from None
    if lo > hi:
        raise UsageError(f"empty prime range {spec!r}")
    return lo, hi


def _emit(obj: Any, text: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def cmd_check(args) -> int:
    report = check_theorem(load_family(args.family))
    _emit(check_to_json(report), check_to_text(report), args.format)
    return 0 if report.certified else 1


def cmd_verify(args) -> int:
    family = load_family(args.family)
    lo, hi = _parse_primes(args.primes)
    if args.guard < 1:
        raise UsageError("--guard must be >= 1")
    report = verify_range(family, lo, hi, guard=args.guard, jobs=max(args.jobs, 1))
    _emit(verify_to_json(report), verify_to_text(report), args.format)
    return 0 if report.ok else 1


def cmd_bern(args) -> int:
    n = args.n
    if n < 0:
        raise UsageError("index must be non-negative")
    if args.prime is None:
        if n > EXACT_THRESHOLD:
            raise UsageError(f"B_{n} is above the exact threshold {EXACT_THRESHOLD}; pass --prime and --prec")
        value = bernoulli_exact(n)
        _emit({"n": n, "value": str(value)}, str(value), args.format)
        return 0
    try:
        x = bernoulli_mod(n, args.prime, args.prec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    obj = {"n": n, **_padic_json(x), "valuation": x.known_valuation(), "unit_digits": x.unit_digits()}
    if x.is_zero:
        text = f"B_{n} == 0 mod {args.prime}^{args.prec} (valuation >= {x.prec_abs})"
    else:
        digits = " ".join(map(str, x.unit_digits()))
        text = (
            f"B_{n} mod {args.prime}^{args.prec}: valuation {x.v_min}, "
            f"unit part {x.r} (base-{args.prime} digits, low first: {digits})"
        )
    _emit(obj, text, args.format)
    return 0


def cmd_zeta(args) -> int:
    p, d = args.prime, args.degree
    try:
        if args.check_bounds:
            classes = None if args.k is None else [args.k]
            report = check_bounds(p, d, classes=classes)
        else:
            if args.k is None:
                raise UsageError("--class is required without --check-bounds")
            est = estimate_coeffs(p, args.k, d)
            report = BoundReport(p, d, {est.k: est})
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    lines = []
    for k, est in report.estimates.items():
        lines.append(f"p = {p}, class k = {k}, degree {d}, certified precision {est.certified_prec}")
        for i in range(d + 1):
            lines.append(f"  a_{i} = {_padic_text(est.certified(i))}")
    if report.checks:
        lines.append(f"{'k':>4} {'i':>3} {'stmt':<12} {'need':>5}  status")
        for c in report.checks:
            need = "-" if c.required is None else str(c.required)
            lines.append(f"{c.k:>4} {c.i:>3} {c.statement:<12} {need:>5}  {c.status.value}")
        counts = {s.value: len(report.by_status(s)) for s in BoundStatus}
        lines.append(", ".join(f"{v} {k}" for k, v in counts.items()))
    _emit(bounds_to_json(report), "\n".join(lines), args.format)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="berncert", description="Certify and test Bernoulli-number congruence families."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("check", parents=[fmt], help="symbolically check a family file")
    p.add_argument("family", help="family JSON file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", parents=[fmt], help="test a family prime by prime")
    p.add_argument("family", help="family JSON file")
    p.add_argument("--primes", required=True, metavar="A:B")
    p.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bern", parents=[fmt], help="Bernoulli number, exact or mod P^K")
    p.add_argument("n", type=int)
    p.add_argument("--prime", type=int)
    p.add_argument("--prec", type=int, default=1)
    p.set_defaults(func=cmd_bern)

    p = sub.add_parser("zeta-coeffs", parents=[fmt], help="p-adic zeta series coefficients")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--class", dest="k", type=int)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--check-bounds", action="store_true")
    p.set_defaults(func=cmd_zeta)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, FamilyFileError) as exc:
        print(f"berncert: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
