"""Replay the operator derivations step by step and print each intermediate form.

    python scripts/replay_derivations.py [--n 4]
"""

import argparse
from fractions import Fraction
from math import factorial

from hwpoly.algebra import P, X, ad_series, apply_to_constant, commutator, graded_exp, op_power
from hwpoly.families import hermite_operator, hermite_recurrence, laguerre_operator, laguerre_sum
from hwpoly.opexpr import evaluate, format_canonical, format_graded, format_univariate
from hwpoly.scalar import I


def show(label, text):
    print(f"  {label:<42} {text}")


def hermite(n):
    print("Hermite via (-i)^n (p + 2ix)^n acting on 1")
    show("[x, p]", format_canonical(commutator(X, P)))
    terms = ad_series(X * X, P)
    show("ad series of x^2 on p", " | ".join(format_canonical(t) for t in terms))
    show("conj(x^2; p)", format_canonical(evaluate("conj(x^2; p)")))
    for k in range(n + 1):
        op = op_power(P + X.scale(2 * I), k)
        show(f"(p + 2ix)^{k}", format_canonical(op))
        show(f"  -> H_{k}", format_univariate(hermite_operator(k)))
        assert hermite_operator(k) == hermite_recurrence(k)


def generating_function(n):
    print("Generating function exp(t(2x - ip)) acting on 1")
    e = graded_exp((X.scale(2) - P.scale(I)).shift_grade(1), n)
    for k in range(n + 1):
        piece = apply_to_constant(e.grade_component(k)).scale(factorial(k))
        show(f"{k}! * [t^{k}]", format_univariate(piece))
    show("exponent, graded", format_graded((X.scale(2) - P.scale(I)).shift_grade(1)))


def laguerre(n, alpha):
    print(f"Laguerre, alpha = {alpha}")
    show("conj(x; p^3) = (p + i)^3", format_canonical(evaluate("conj(x; p^3)")))
    for k in range(n + 1):
        a = laguerre_operator(k, alpha)
        assert a == laguerre_sum(k, alpha)
        show(f"L_{k}", format_univariate(a, ascending=True))


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--alpha", default="1/2")
    args = ap.parse_args()
    hermite(args.n)
    generating_function(args.n)
    laguerre(args.n, Fraction(args.alpha))
