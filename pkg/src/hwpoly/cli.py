"""Command-line front end.

Exit codes: 0 success, 1 a check or agreement failure (or a non-terminating
conjugation), 2 usage or parse errors.  Data goes to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import apply_to_constant
from .checks import DEFAULT_ORDERS, MUTATIONS, SUITES, GenFuncParams, SuiteConfig, run_suite
from .families import HERMITE_METHODS, LAGUERRE_METHODS, poly_eval_f
from .opexpr import LoweringError, OpExprSyntaxError, format_canonical, format_univariate, lower_ast, parse_opexpr
from .poly import UnivariatePoly

PROG = "hwpoly"
_DECIMAL_RE = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?")
_DEFAULT_N_MAX = {"hermite": 50, "addition": 20, "laguerre": 30, "operator": 20}


class UsageError(Exception):
    pass


def rational_text(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str, what: str) -> Fraction:
    if not re.fullmatch(r"\s*[+-]?\d+(\s*/\s*\d+)?\s*", text):
        raise UsageError(f"malformed rational for {what}: {text!r}")
    try:
        return Fraction(text.replace(" ", ""))
    except ZeroDivisionError:
        raise UsageError(f"zero denominator in {what}: {text!r}") from None


@dataclass(frozen=True)
class OutputRecord:
    family: str
    n: int
    alpha: str | None
    method: str
    coeffs: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_poly(cls, family: str, n: int, alpha: Fraction | None, method: str,
                  poly: UnivariatePoly) -> OutputRecord:
        if not poly.is_rational():
            raise ValueError(f"{family} {method} produced non-rational coefficients")
        values = [poly[k].to_fraction() for k in range(n + 1)]
        return cls(family, n, None if alpha is None else rational_text(alpha), method,
                   tuple(rational_text(v) for v in values))

    @classmethod
    def from_dict(cls, data: dict) -> OutputRecord:
        return cls(data["family"], int(data["n"]), data.get("alpha"), data["method"],
                   tuple(data["coeffs"]))

    def to_dict(self) -> dict:
        d = asdict(self)
        d["coeffs"] = list(self.coeffs)
        return d

    def fractions(self) -> list[Fraction]:
        return [Fraction(c) for c in self.coeffs]

    def poly(self) -> UnivariatePoly:
        return UnivariatePoly(self.fractions())


def _family_methods(family: str) -> dict:
    return HERMITE_METHODS if family == "hermite" else LAGUERRE_METHODS


def _resolve_poly_args(args: argparse.Namespace) -> Fraction | None:
    if args.n < 0:
        raise UsageError("n must be nonnegative")
    methods = _family_methods(args.family)
    if args.method != "all" and args.method not in methods:
        raise UsageError(f"method {args.method!r} is not available for {args.family} "
                         f"(choose from {', '.join(methods)})")
    if args.family == "laguerre":
        if args.alpha is None:
            raise UsageError("missing --alpha (required for laguerre)")
        return parse_rational(args.alpha, "--alpha")
    if args.alpha is not None:
        raise UsageError("--alpha only applies to laguerre")
    return None


def _compute(family: str, method: str, n: int, alpha: Fraction | None) -> UnivariatePoly:
    fn = _family_methods(family)[method]
    return fn(n) if family == "hermite" else fn(n, alpha)


def build_records(family: str, n: int, alpha: Fraction | None, method: str) -> list[OutputRecord]:
    methods = list(_family_methods(family)) if method == "all" else [method]
    return [OutputRecord.from_poly(family, n, alpha, m, _compute(family, m, n, alpha)) for m in methods]


def _csv_header(rec: OutputRecord) -> str:
    fields = [f"family={rec.family}", f"n={rec.n}"]
    if rec.alpha is not None:
        fields.append(f"alpha={rec.alpha}")
    fields.append(f"method={rec.method}")
    return "# " + ",".join(fields)


def render_records(records: list[OutputRecord], fmt: str, agreement: bool | None) -> str:
    if fmt == "json":
        doc: dict = {"records": [r.to_dict() for r in records]}
        if agreement is not None:
            doc["agreement"] = agreement
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for rec in records:
            buf.write(_csv_header(rec) + "\n")
            writer.writerow(["degree", "coefficient"])
            for k, c in enumerate(rec.coeffs):
                writer.writerow([k, c])
        if agreement is not None:
            buf.write(f"# agreement={'true' if agreement else 'false'}\n")
        return buf.getvalue()
    lines = []
    for rec in records:
        text = format_univariate(rec.poly(), ascending=True)
        lines.append(text if len(records) == 1 and agreement is None else f"{rec.method}: {text}")
    if agreement is not None:
        lines.append(f"agreement: {'true' if agreement else 'false'}")
    return "\n".join(lines) + "\n"


def cmd_generate(args: argparse.Namespace) -> int:
    alpha = _resolve_poly_args(args)
    records = build_records(args.family, args.n, alpha, args.method)
    agreement = None
    if args.method == "all":
        agreement = all(r.coeffs == records[0].coeffs for r in records)
    sys.stdout.write(render_records(records, args.format, agreement))
    if agreement is False:
        print(f"{PROG}: methods disagree for {args.family} n={args.n}", file=sys.stderr)
        return 1
    return 0


def _parse_points(text: str) -> list[tuple[str, float]]:
    points = []
    for raw in text.split(","):
        raw = raw.strip()
        if not _DECIMAL_RE.fullmatch(raw):
            raise UsageError(f"malformed point {raw!r}")
        points.append((raw, float(raw)))
    return points


def cmd_eval(args: argparse.Namespace) -> int:
    alpha = _resolve_poly_args(args)
    if args.method == "all":
        raise UsageError("eval needs a single --method")
    points = _parse_points(args.points)
    poly = _compute(args.family, args.method, args.n, alpha)
    values = [(text, poly_eval_f(poly, x)) for text, x in points]
    if args.format == "json":
        doc = {"family": args.family, "n": args.n,
               "alpha": None if alpha is None else rational_text(alpha), "method": args.method,
               "values": [{"point": t, "value": v} for t, v in values]}
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["point", "value"])
        writer.writerows([t, repr(v)] for t, v in values)
        sys.stdout.write(buf.getvalue())
    else:
        for t, v in values:
            print(f"{t} {v!r}")
    return 0


def cmd_normalize(args: argparse.Namespace) -> int:
    try:
        ast = parse_opexpr(args.expr)
    except OpExprSyntaxError as exc:
        print(f"{PROG}: syntax error at {exc}", file=sys.stderr)
        return 2
    try:
        op = lower_ast(ast, args.expr)
    except LoweringError as exc:
        print(f"{PROG}: {exc}", file=sys.stderr)
        return 1
    canonical = format_canonical(op)
    applied = format_univariate(apply_to_constant(op)) if args.apply_to_constant else None
    if args.format == "json":
        doc = {"canonical": canonical}
        if applied is not None:
            doc["applied_to_constant"] = applied
        sys.stdout.write(json.dumps(doc) + "\n")
    else:
        print(canonical)
        if applied is not None:
            print(applied)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    orders = DEFAULT_ORDERS
    if args.orders is not None:
        orders = tuple(parse_rational(t, "--orders") for t in args.orders.split(","))
    n_max = dict(_DEFAULT_N_MAX)
    if args.n_max is not None:
        if args.n_max < 0:
            raise UsageError("--n-max must be nonnegative")
        n_max = {k: args.n_max for k in n_max}
    if args.terms < 1:
        raise UsageError("--terms must be positive")
    config = SuiteConfig(
        n_max_hermite=n_max["hermite"], n_max_addition=n_max["addition"],
        n_max_laguerre=n_max["laguerre"], n_max_operator=n_max["operator"], orders=orders,
        genfunc=GenFuncParams(args.x, args.alpha, args.terms, args.tol),
    )
    suites = SUITES if args.suite == "all" else (args.suite,)
    reports = [run_suite(s, config, args.mutate) for s in suites]
    if args.format == "json":
        sys.stdout.write(json.dumps({"reports": [r.to_dict() for r in reports]}, indent=2) + "\n")
    else:
        for r in reports:
            print(r)
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=PROG, description="Exact Hermite/Laguerre polynomials "
                                     "from Heisenberg-Weyl operator algebra.")
    sub = parser.add_subparsers(dest="command", required=True)

    def poly_args(p: argparse.ArgumentParser, formats: Sequence[str]) -> None:
        p.add_argument("family", choices=("hermite", "laguerre"))
        p.add_argument("n", type=int)
        p.add_argument("--alpha", help="Laguerre order as a rational, e.g. 1/2 (use --alpha=-1/3 for negatives)")
        p.add_argument("--method", default="operator",
                       choices=("operator", "rodrigues", "sum", "recurrence", "all"))
        p.add_argument("--format", default="plain", choices=formats)

    gen = sub.add_parser("generate", help="emit coefficient tables")
    poly_args(gen, ("plain", "json", "csv"))
    gen.set_defaults(func=cmd_generate)

    ev = sub.add_parser("eval", help="evaluate a polynomial at decimal points")
    poly_args(ev, ("plain", "json", "csv"))
    ev.add_argument("--points", required=True, help="comma-separated decimals, e.g. 1,-1,0.25")
    ev.set_defaults(func=cmd_eval)

    norm = sub.add_parser("normalize", help="normal-order an opexpr-v1 expression")
    norm.add_argument("expr")
    norm.add_argument("--apply-to-constant", action="store_true",
                      help="also print the operator applied to the constant function 1")
    norm.add_argument("--format", default="plain", choices=("plain", "json"))
    norm.set_defaults(func=cmd_normalize)

    chk = sub.add_parser("check", help="run identity checks")
    chk.add_argument("suite", choices=SUITES + ("all",))
    chk.add_argument("--n-max", type=int, default=None,
                     help="largest n (defaults: hermite 50, addition 20, laguerre 30, operator 20)")
    chk.add_argument("--orders", help="comma-separated Laguerre orders (default 0,1,5,1/2,-1/3,7/3)")
    chk.add_argument("--x", type=float, default=0.5)
    chk.add_argument("--alpha", type=float, default=0.3)
    chk.add_argument("--terms", type=int, default=40)
    chk.add_argument("--tol", type=float, default=1e-12)
    chk.add_argument("--mutate", choices=sorted(MUTATIONS), default=None,
                     help="swap in a broken generator (negative control)")
    chk.add_argument("--format", default="plain", choices=("plain", "json"))
    chk.set_defaults(func=cmd_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{PROG} {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
