"""Command line front end.

Default invocation computes one series:

    poincare-series --d 1,2,3 --kind kernel --format reduced

Subcommands replay the shipped golden corpus (golden-check) or sweep all
small degree systems comparing the independent computation routes
(crosscheck). Exit codes: 0 success, 1 usage error, 2 verification
failure. Identical requests produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd, lcm

from .algebra import ONE, Poly, RatFun, one_minus_z
from .closedform import applicable as closedform_applicable
from .closedform import for_degree_vector as closedform_series
from .counting import DegreeVector, dimension
from .golden import CorpusError, check_corpus, shipped_corpus_path
from .springer import poincare_series, single_form_series

KIND_CHOICES = ("invariants", "semiinvariants", "covariants", "kernel")
METHOD_CHOICES = ("springer", "counting", "closedform", "all")
FORMAT_CHOICES = ("reduced", "factored", "series", "json")
DEFAULT_TRUNCATE = 10

# covariants and the derivation kernel are the semi-invariant algebra
def canonical_kind(kind: str) -> str:
    return "invariants" if kind == "invariants" else "semiinvariants"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


class UsageError(Exception):
    pass


def _parse_degrees(text: str) -> DegreeVector:
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed degree vector {text!r}") from None
    try:
        return DegreeVector(tuple(parts))
    except ValueError as exc:
        raise UsageError(f"malformed degree vector {text!r}: {exc}") from None


def greedy_factor(den: Poly):
    """Split a denominator into (1 - z^a) factors, a descending, plus a remainder."""
    factors: dict[int, int] = {}
    rem = den
    a = rem.degree
    while a >= 1:
        if rem.degree >= a:
            q, r = divmod(rem, one_minus_z(a))
            if r.is_zero():
                factors[a] = factors.get(a, 0) + 1
                rem = q
                continue
        a -= 1
    return factors, rem


def _clear_pair(num: Poly, other: Poly):
    """Scale two polynomials by one rational so both become integer and primitive."""
    scale = 1
    for c in (*num.coeffs, *other.coeffs):
        scale = lcm(scale, c.denominator)
    ni = [int(c * scale) for c in num.coeffs]
    oi = [int(c * scale) for c in other.coeffs]
    content = 0
    for v in (*ni, *oi):
        content = gcd(content, abs(v))
    if content > 1:
        ni = [v // content for v in ni]
        oi = [v // content for v in oi]
    pivot = next((v for v in oi if v), next((v for v in ni if v), 1))
    if pivot < 0:
        ni = [-v for v in ni]
        oi = [-v for v in oi]
    return ni, oi


def _display_parts(f: RatFun):
    """Integer-cleared numerator, greedy denominator factors, integer remainder."""
    factors, rem = greedy_factor(f.den)
    num_ints, rem_ints = _clear_pair(f.num, rem)
    return num_ints, sorted(factors.items()), rem_ints


def _factor_text(factors) -> str:
    parts = []
    for a, e in factors:
        base = f"(1-z^{a})" if a > 1 else "(1-z)"
        parts.append(f"{base}^{e}" if e > 1 else base)
    return " ".join(parts)


def _ints_text(values) -> str:
    return " ".join(str(v) for v in values)


def format_reduced(f: RatFun) -> str:
    num_ints, den_ints = _clear_pair(f.num, f.den)
    return f"num = {_ints_text(num_ints)}\nden = {_ints_text(den_ints)}"


def format_factored(f: RatFun) -> str:
    num_ints, factors, rem_ints = _display_parts(f)
    num_poly = Poly(num_ints)
    num_text = num_poly.to_string()
    if len([c for c in num_poly.coeffs if c]) > 1:
        num_text = f"({num_text})"
    den_parts = []
    if rem_ints == [] or rem_ints == [1]:
        pass
    elif len(rem_ints) == 1:
        den_parts.append(str(rem_ints[0]))
    if factors:
        den_parts.append(_factor_text(factors))
    if len(rem_ints) > 1:
        den_parts.append(f"({Poly(rem_ints).to_string()})")
    if not den_parts:
        return num_text
    return f"{num_text} / {' '.join(den_parts)}"


def _series_ints(f: RatFun, truncate: int):
    return [int(c) if c.denominator == 1 else str(c) for c in f.expand(truncate)]


def _emit_result(d: DegreeVector, args, f: RatFun, checks=None) -> str:
    if args.format == "series":
        truncate = args.truncate if args.truncate is not None else DEFAULT_TRUNCATE
        body = _ints_text(_series_ints(f, truncate))
    elif args.format == "reduced":
        body = format_reduced(f)
    elif args.format == "factored":
        body = format_factored(f)
    else:
        num_ints, factors, rem_ints = _display_parts(f)
        obj = {
            "d": list(d.degrees),
            "kind": args.kind,
            "method": args.method,
            "numerator": num_ints,
            "denominator_factors": [[a, e] for a, e in factors],
        }
        if rem_ints not in ([], [1]):
            obj["denominator_remainder"] = rem_ints
        if args.truncate is not None:
            obj["series"] = _series_ints(f, args.truncate)
        if checks is not None:
            obj["checks"] = checks
        return json.dumps(obj)
    if checks is not None:
        body += "".join(f"\ncheck {name}: {'ok' if ok else 'MISMATCH'}" for name, ok in checks.items())
    return body


def _run_counting(d: DegreeVector, args) -> str:
    if args.format in ("reduced", "factored"):
        raise UsageError("method=counting produces series output only; use --format series or json")
    truncate = args.truncate if args.truncate is not None else DEFAULT_TRUNCATE
    kind = canonical_kind(args.kind)
    dims = [dimension(d, m, kind) for m in range(truncate + 1)]
    if args.format == "series":
        return _ints_text(dims)
    return json.dumps(
        {"d": list(d.degrees), "kind": args.kind, "method": "counting", "series": dims}
    )


def _method_all_checks(d: DegreeVector, kind: str, f: RatFun, truncate) -> dict:
    horizon = truncate if truncate is not None else DEFAULT_TRUNCATE
    series = f.expand(horizon)
    checks = {
        "counting": series == [dimension(d, m, kind) for m in range(horizon + 1)]
    }
    if closedform_applicable(d):
        checks["closedform"] = closedform_series(d, kind) == f
    if d.size == 1:
        single_kind = "invariants" if kind == "invariants" else "covariants"
        checks["single-form"] = single_form_series(d.d_star, single_kind) == f
    return checks


def run_compute(args) -> int:
    d = _parse_degrees(args.d)
    kind = canonical_kind(args.kind)
    if args.method == "counting":
        print(_run_counting(d, args))
        return 0
    if args.method == "closedform":
        if not closedform_applicable(d):
            raise UsageError("method=closedform covers all-ones and all-twos systems only")
        print(_emit_result(d, args, closedform_series(d, kind)))
        return 0
    f = poincare_series(d, kind)
    if args.method == "springer":
        print(_emit_result(d, args, f))
        return 0
    checks = _method_all_checks(d, kind, f, args.truncate)
    print(_emit_result(d, args, f, checks))
    if not all(checks.values()):
        bad = ", ".join(name for name, ok in checks.items() if not ok)
        print(f"verification failure: {bad}", file=sys.stderr)
        return 2
    return 0


def run_golden_check(path: str | None) -> int:
    corpus_path = path if path is not None else shipped_corpus_path()
    try:
        with open(corpus_path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise UsageError(f"cannot read corpus: {exc}") from None
    failures = check_corpus(text)
    return 2 if failures else 0


def degree_multisets(max_total: int, max_deg: int):
    """All descending degree tuples with sum of (d_k + 1) bounded by max_total."""
    out = []

    def rec(prefix, budget, ceiling):
        for d in range(min(ceiling, max_deg), 0, -1):
            if d + 1 <= budget:
                cur = prefix + (d,)
                out.append(cur)
                rec(cur, budget - d - 1, d)

    rec((), max_total, max_deg)
    return sorted(out, key=lambda t: (len(t), t))


def run_crosscheck(max_n: int, max_deg: int, max_m: int, emit=print) -> int:
    """Compare the independent routes on every small system; 0 iff all agree."""
    systems = degree_multisets(max_n, max_deg)
    failures = 0
    for degs in systems:
        d = DegreeVector(degs)
        problems = []
        for kind in ("invariants", "semiinvariants"):
            series = poincare_series(d, kind).expand(max_m)
            routes = {"counting": [dimension(d, m, kind) for m in range(max_m + 1)]}
            if closedform_applicable(d):
                routes["closedform"] = closedform_series(d, kind).expand(max_m)
            if d.size == 1:
                single_kind = "invariants" if kind == "invariants" else "covariants"
                routes["single-form"] = single_form_series(d.d_star, single_kind).expand(max_m)
            for route, values in routes.items():
                mismatch = next(
                    (m for m in range(max_m + 1) if series[m] != values[m]), None
                )
                if mismatch is not None:
                    problems.append(f"{route} kind={kind} m={mismatch}")
        label = ",".join(map(str, degs))
        if problems:
            failures += 1
            emit(f"FAIL  d={label}  ({'; '.join(problems)})")
        else:
            emit(f"PASS  d={label}")
    emit(f"crosscheck: {len(systems)} systems, {failures} failures")
    return 2 if failures else 0


def build_parser() -> _Parser:
    parser = _Parser(prog="poincare-series", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command")

    compute = sub.add_parser("compute", help="compute one Poincare series (default)")
    compute.add_argument("--d", required=True, help="comma-separated form degrees, e.g. 1,2,3")
    compute.add_argument("--kind", choices=KIND_CHOICES, default="semiinvariants")
    compute.add_argument("--method", choices=METHOD_CHOICES, default="springer")
    compute.add_argument("--format", choices=FORMAT_CHOICES, default="reduced")
    compute.add_argument("--truncate", type=int, default=None, help="series length for series output")

    golden = sub.add_parser("golden-check", help="replay the golden corpus")
    golden.add_argument("path", nargs="?", default=None)

    cross = sub.add_parser("crosscheck", help="compare computation routes on small systems")
    cross.add_argument("--max-n", type=int, default=8, dest="max_n")
    cross.add_argument("--max-deg", type=int, default=4, dest="max_deg")
    cross.add_argument("--max-m", type=int, default=10, dest="max_m")

    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] not in ("compute", "golden-check", "crosscheck", "-h", "--help"):
        argv = ["compute"] + argv
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    if args.command is None:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: no request given", file=sys.stderr)
        return 1
    try:
        if args.command == "compute":
            if args.truncate is not None and args.truncate < 0:
                raise UsageError("--truncate must be nonnegative")
            return run_compute(args)
        if args.command == "golden-check":
            return run_golden_check(args.path)
        return run_crosscheck(args.max_n, args.max_deg, args.max_m)
    except (UsageError, CorpusError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 1


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
