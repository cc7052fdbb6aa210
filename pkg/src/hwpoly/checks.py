"""Executable checks for the Hermite and Laguerre identities.

Each check returns a :class:`CheckReport`.  Exact checks stop at the smallest
failing ``n`` and name the first differing coefficient.

Negative controls: every exact generator check accepts ``mutate=True``, which
swaps in a deliberately broken generator so the suite can prove it would
notice.  :data:`MUTATIONS` maps the mutation names to the checks they target.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import (
    P, X, ad_series, bch_factorize_check, op_power, similarity_conjugate,
)
from .families import (
    LaguerreOrder, OrderLike, gbinom, hermite_addition_rhs, hermite_bivariate_shift,
    hermite_operator, hermite_recurrence, hermite_rodrigues, laguerre_operator,
    laguerre_rodrigues, laguerre_sum, poly_eval_f,
)
from .opexpr import format_canonical
from .poly import UnivariatePoly
from .report import CheckReport
from .scalar import I

DEFAULT_ORDERS: tuple[Fraction, ...] = tuple(
    Fraction(v) for v in ("0", "1", "5", "1/2", "-1/3", "7/3")
)

# mutation name -> suite it breaks
MUTATIONS = {
    "hermite-shift": "hermite",          # p + ix instead of p + 2ix
    "addition-prefactor": "addition",    # 2^-n instead of 2^-n/2
    "laguerre-sign": "laguerre",         # (d/dx + 1)^n instead of (d/dx - 1)^n
}


@dataclass(frozen=True)
class GenFuncParams:
    x: float = 0.5
    alpha: float = 0.3
    terms: int = 40
    tol: float = 1e-12


@dataclass(frozen=True)
class SuiteConfig:
    n_max_hermite: int = 50
    n_max_addition: int = 20
    n_max_laguerre: int = 30
    n_max_operator: int = 20
    orders: tuple[Fraction, ...] = DEFAULT_ORDERS
    genfunc: GenFuncParams = field(default_factory=GenFuncParams)


def _first_coefficient_mismatch(named: Sequence[tuple[str, UnivariatePoly]]) -> str | None:
    ref_name, ref = named[0]
    for name, poly in named[1:]:
        if poly == ref:
            continue
        for k in range(max(len(ref), len(poly))):
            if ref[k] != poly[k]:
                return (f"coefficient x^{k}: {ref_name}={ref[k].components_str()}, "
                        f"{name}={poly[k].components_str()}")
    return None


def check_hermite_consistency(n_max: int, mutate: bool = False) -> CheckReport:
    params = {"n_max": str(n_max)}
    if mutate:
        params["mutation"] = "hermite-shift"
    shift = 1 if mutate else 2
    for n in range(n_max + 1):
        mismatch = _first_coefficient_mismatch([
            ("operator", hermite_operator(n, shift=shift)),
            ("rodrigues", hermite_rodrigues(n)),
            ("recurrence", hermite_recurrence(n)),
        ])
        if mismatch:
            return CheckReport.fail("hermite_consistency", params, f"n={n}, {mismatch}")
    return CheckReport.ok("hermite_consistency", params)


def check_addition_theorem(n_max: int, mutate: bool = False) -> CheckReport:
    params = {"n_max": str(n_max)}
    if mutate:
        params["mutation"] = "addition-prefactor"
    for n in range(n_max + 1):
        rhs = hermite_addition_rhs(n, prefactor=Fraction(1, 2 ** n) if mutate else None)
        residue = rhs.nonrational_terms()
        if residue:
            (a, b), value = residue[0]
            return CheckReport.fail(
                "addition_theorem", params,
                f"n={n}, rhs term x^{a} y^{b} keeps a sqrt2/imaginary part: {value.components_str()}",
            )
        lhs = hermite_bivariate_shift(n)
        if lhs != rhs:
            keys = set(lhs.terms) | set(rhs.terms)
            a, b = min((k for k in keys if lhs[k] != rhs[k]), key=lambda k: (k[0] + k[1], -k[0]))
            return CheckReport.fail(
                "addition_theorem", params,
                f"n={n}, term x^{a} y^{b}: lhs={lhs[(a, b)].components_str()}, "
                f"rhs={rhs[(a, b)].components_str()}",
            )
    return CheckReport.ok("addition_theorem", params)


def generating_function_error(x: float, alpha: float, N: int) -> float:
    """``|sum_{n<=N} H_n(x) alpha^n/n! - exp(2 alpha x - alpha^2)|`` in doubles."""
    partial = 0.0
    weight = 1.0
    for n in range(N + 1):
        if n:
            weight *= alpha / n
        partial += poly_eval_f(hermite_operator(n), x) * weight
    return abs(partial - math.exp(2 * alpha * x - alpha * alpha))


def check_generating_function(x: float = 0.5, alpha: float = 0.3, N: int = 40,
                              tol: float = 1e-12) -> CheckReport:
    params = {"x": repr(x), "alpha": repr(alpha), "N": str(N), "tol": repr(tol)}
    err = generating_function_error(x, alpha, N)
    if err < tol:
        return CheckReport.ok("generating_function", params)
    return CheckReport.fail("generating_function", params,
                            f"|partial sum - exp(2*alpha*x - alpha^2)| = {err!r} >= tol")


def check_laguerre_consistency(n_max: int, orders: Sequence[OrderLike] = DEFAULT_ORDERS,
                               mutate: bool = False) -> CheckReport:
    alphas = [LaguerreOrder.coerce(o).alpha for o in orders]
    params = {"n_max": str(n_max), "orders": ",".join(str(a) for a in alphas)}
    if mutate:
        params["mutation"] = "laguerre-sign"
    offset = 1 if mutate else -1
    for n in range(n_max + 1):
        for alpha in alphas:
            polys = [
                ("operator", laguerre_operator(n, alpha, offset=offset)),
                ("sum", laguerre_sum(n, alpha)),
                ("rodrigues", laguerre_rodrigues(n, alpha)),
            ]
            mismatch = _first_coefficient_mismatch(polys)
            if mismatch:
                return CheckReport.fail("laguerre_consistency", params,
                                        f"n={n}, alpha={alpha}, {mismatch}")
            expected = gbinom(n + alpha, n)
            for name, poly in polys:
                if poly[0] != expected:
                    return CheckReport.fail(
                        "laguerre_consistency", params,
                        f"n={n}, alpha={alpha}, {name} constant term "
                        f"{poly[0].components_str()} != C(n+alpha, n) = {expected}",
                    )
    return CheckReport.ok("laguerre_consistency", params)


def check_operator_identities(n_max: int = 20, bch_grade: int = 12) -> CheckReport:
    params = {"n_max": str(n_max), "bch_grade": str(bch_grade)}
    shifted = P + I
    for n in range(n_max + 1):
        lhs = similarity_conjugate(X, op_power(P, n), 1)
        rhs = op_power(shifted, n)
        if lhs != rhs:
            return CheckReport.fail(
                "operator_identities", params,
                f"n={n}, e^x p^n e^-x = {format_canonical(lhs)} but (p+i)^n = {format_canonical(rhs)}",
            )
    x2 = op_power(X, 2)
    series = ad_series(x2, P)
    conj = similarity_conjugate(x2, P, 1)
    expected = P + X.scale(2 * I)
    if conj != expected or len(series) != 2:
        return CheckReport.fail(
            "operator_identities", params,
            f"e^(x^2) p e^(-x^2) = {format_canonical(conj)} at series depth {len(series)}; "
            f"expected p + 2*i*x at depth 2",
        )
    bch = bch_factorize_check(X.scale(2).shift_grade(1), P.scale(-I).shift_grade(1), bch_grade)
    if not bch.passed:
        return CheckReport.fail("operator_identities", params, f"BCH factorization: {bch.first_failure}")
    return CheckReport.ok("operator_identities", params)


SUITES = ("hermite", "addition", "genfunc", "laguerre", "operator")


def run_suite(name: str, config: SuiteConfig = SuiteConfig(), mutation: str | None = None) -> CheckReport:
    if mutation is not None and mutation not in MUTATIONS:
        raise ValueError(f"unknown mutation {mutation!r}")
    mutate = mutation is not None and MUTATIONS[mutation] == name
    runners: dict[str, Callable[[], CheckReport]] = {
        "hermite": lambda: check_hermite_consistency(config.n_max_hermite, mutate),
        "addition": lambda: check_addition_theorem(config.n_max_addition, mutate),
        "genfunc": lambda: check_generating_function(
            config.genfunc.x, config.genfunc.alpha, config.genfunc.terms, config.genfunc.tol),
        "laguerre": lambda: check_laguerre_consistency(config.n_max_laguerre, config.orders, mutate),
        "operator": lambda: check_operator_identities(config.n_max_operator),
    }
    if name not in runners:
        raise ValueError(f"unknown suite {name!r}")
    return runners[name]()


def run_all(config: SuiteConfig = SuiteConfig(), mutation: str | None = None) -> list[CheckReport]:
    """All five checks, always in the order hermite, addition, genfunc, laguerre, operator."""
    return [run_suite(name, config, mutation) for name in SUITES]
