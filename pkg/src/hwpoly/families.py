"""Hermite and Laguerre polynomials from several independent constructions.

Hermite ``H_n``:
  * ``hermite_operator``  - ``(-i)^n (p + 2ix)^n`` acting on the constant 1
  * ``hermite_rodrigues`` - repeated differentiation of ``q(x) e^{-x^2}``
  * ``hermite_recurrence`` - ``H_{n+1} = 2x H_n - 2n H_{n-1}`` (reference oracle)

Associated Laguerre ``L_n^alpha``:
  * ``laguerre_operator``  - ``x^{-alpha} (d/dx - 1)^n x^{n+alpha} / n!`` expanded binomially
  * ``laguerre_sum``       - ``sum_k C(n+alpha, n-k) (-1)^k x^k / k!``
  * ``laguerre_rodrigues`` - repeated differentiation of ``x^{n+alpha} e^{-x}``
  * ``laguerre_recurrence`` - three-term recurrence (reference oracle)

The recurrences are textbook ground truth, kept independent of every other
route so the cross-checks mean something.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Mapping

from .algebra import P, X, apply_to_constant, op_normal_product
from .algebra import OperatorPoly
from .poly import BivariatePoly, UnivariatePoly
from .scalar import I, ONE, SQRT2, ZERO, QuadComplexScalar, ScalarLike

_coerce = QuadComplexScalar.coerce


class InternalConsistencyError(AssertionError):
    """A construction produced a shape that the mathematics rules out."""


@dataclass(frozen=True)
class LaguerreOrder:
    alpha: Fraction

    def __post_init__(self) -> None:
        if isinstance(self.alpha, float):
            raise TypeError("Laguerre order must be an exact rational, not a float")
        object.__setattr__(self, "alpha", Fraction(self.alpha))

    @classmethod
    def coerce(cls, value: LaguerreOrder | Fraction | int | str) -> LaguerreOrder:
        if isinstance(value, LaguerreOrder):
            return value
        if isinstance(value, float):
            raise TypeError("Laguerre order must be an exact rational, not a float")
        return cls(Fraction(value))

    def __str__(self) -> str:
        return f"{self.alpha.numerator}/{self.alpha.denominator}"


OrderLike = LaguerreOrder | Fraction | int | str


def falling_factorial(gamma: Fraction | int, m: int) -> Fraction:
    """``gamma (gamma-1) ... (gamma-m+1)``; empty product for ``m = 0``."""
    if m < 0:
        raise ValueError("falling factorial length must be nonnegative")
    gamma = Fraction(gamma)
    out = Fraction(1)
    for j in range(m):
        out *= gamma - j
    return out


def gbinom(gamma: Fraction | int, m: int) -> Fraction:
    return falling_factorial(gamma, m) / factorial(m)


# Weighted forms closed under d/dx


@dataclass(frozen=True)
class GaussWeightedPoly:
    """``q(x) * e^{-x^2}``."""

    q: UnivariatePoly

    def derivative(self) -> GaussWeightedPoly:
        return GaussWeightedPoly(self.q.derivative() - self.q.mul_x().scale(2))


@dataclass(frozen=True)
class LaguerreWeightedPoly:
    """``sum_k coeffs[k] * x^(gamma + k) * e^{-x}`` for shifts ``k >= 0``."""

    gamma: Fraction
    coeffs: Mapping[int, QuadComplexScalar] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for k, c in self.coeffs.items():
            if k < 0:
                raise ValueError("shifts are measured from gamma and must be nonnegative")
            c = _coerce(c)
            if c:
                clean[k] = c
        object.__setattr__(self, "gamma", Fraction(self.gamma))
        object.__setattr__(self, "coeffs", clean)

    def derivative(self) -> LaguerreWeightedPoly:
        # c x^(g+k) e^-x  ->  (g+k) c x^(g+k-1) e^-x  -  c x^(g+k) e^-x;
        # re-anchor at g-1 so the first piece sits at shift k and the second at k+1
        out: dict[int, QuadComplexScalar] = {}
        for k, c in self.coeffs.items():
            down = c * (self.gamma + k)
            out[k] = out.get(k, ZERO) + down
            out[k + 1] = out.get(k + 1, ZERO) - c
        return LaguerreWeightedPoly(self.gamma - 1, out)


# Hermite


def hermite_rodrigues(n: int) -> UnivariatePoly:
    """``(-1)^n e^{x^2} d^n/dx^n e^{-x^2}`` by symbolic differentiation."""
    w = GaussWeightedPoly(UnivariatePoly((1,)))
    for _ in range(n):
        w = w.derivative()
    return w.q if n % 2 == 0 else -w.q


_shifted_momentum_powers: dict[QuadComplexScalar, list[OperatorPoly]] = {}


def shifted_momentum(shift: ScalarLike = 2) -> OperatorPoly:
    """``p + shift*i*x``."""
    return P + X.scale(_coerce(shift) * I)


def _shifted_momentum_power(n: int, shift: QuadComplexScalar) -> OperatorPoly:
    powers = _shifted_momentum_powers.get(shift, [OperatorPoly.scalar(1)])
    if len(powers) <= n:
        # extend a copy and publish it whole so concurrent readers never see a partial list
        powers = list(powers)
        base = shifted_momentum(shift)
        while len(powers) <= n:
            powers.append(op_normal_product(powers[-1], base))
        _shifted_momentum_powers[shift] = powers
    return powers[n]


def hermite_operator(n: int, shift: ScalarLike = 2) -> UnivariatePoly:
    """``(-i)^n (p + 2ix)^n`` applied to the constant function 1.

    ``shift`` replaces the 2 in ``2ix``; anything other than 2 is only useful
    as a deliberately broken generator for negative controls.  Powers are
    memoized per shift so a sweep over ``n`` costs one multiplication per step.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    op = _shifted_momentum_power(n, _coerce(shift))
    return apply_to_constant(op).scale(ONE.times_i_power(-n))


def hermite_recurrence(n: int) -> UnivariatePoly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev, cur = UnivariatePoly(), UnivariatePoly((1,))
    for k in range(n):
        prev, cur = cur, cur.mul_x().scale(2) - prev.scale(2 * k)
    return cur


def hermite_bivariate_shift(n: int) -> BivariatePoly:
    """``H_n(x + y)`` by binomial substitution into the operator-route ``H_n``."""
    return BivariatePoly.shifted(hermite_operator(n))


def hermite_addition_rhs(n: int, prefactor: ScalarLike | None = None) -> BivariatePoly:
    """``2^{-n/2} sum_k C(n,k) H_k(sqrt2 x) H_{n-k}(sqrt2 y)``.

    ``2^{-n/2}`` is carried exactly as ``(sqrt2/2)^n``.  ``prefactor`` overrides
    it (negative controls only).
    """
    scale = (SQRT2 / 2) ** n if prefactor is None else _coerce(prefactor)
    scaled = [hermite_operator(k).rescale_argument(SQRT2) for k in range(n + 1)]
    total = BivariatePoly()
    for k in range(n + 1):
        left = BivariatePoly.from_univariate(scaled[k], "x")
        right = BivariatePoly.from_univariate(scaled[n - k], "y")
        total = total + (left * right).scale(comb(n, k))
    return total.scale(scale)


# Laguerre


def laguerre_operator(n: int, order: OrderLike, offset: int = -1) -> UnivariatePoly:
    """``(1/n!) x^{-alpha} (d/dx - 1)^n x^{n+alpha}`` expanded term by term.

    ``(d/dx - 1)^n = sum_m C(n,m) (-1)^{n-m} d^m/dx^m`` and
    ``d^m/dx^m x^{n+alpha} = ff(n+alpha, m) x^{n+alpha-m}``.  ``offset`` is the
    constant in ``d/dx + offset``; only negative controls pass anything but -1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    alpha = LaguerreOrder.coerce(order).alpha
    coeffs = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        coeffs[n - m] += comb(n, m) * Fraction(offset) ** (n - m) * falling_factorial(n + alpha, m)
    nf = factorial(n)
    return UnivariatePoly(c / nf for c in coeffs)


def laguerre_sum(n: int, order: OrderLike) -> UnivariatePoly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    alpha = LaguerreOrder.coerce(order).alpha
    return UnivariatePoly(
        gbinom(n + alpha, n - k) * (-1) ** k / factorial(k) for k in range(n + 1)
    )


def laguerre_rodrigues(n: int, order: OrderLike) -> UnivariatePoly:
    """``(1/n!) x^{-alpha} e^x d^n/dx^n (e^{-x} x^{n+alpha})`` symbolically."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    alpha = LaguerreOrder.coerce(order).alpha
    w = LaguerreWeightedPoly(n + alpha, {0: ONE})
    for _ in range(n):
        w = w.derivative()
    base = w.gamma - alpha
    if base.denominator != 1 or base < 0:
        raise InternalConsistencyError(
            f"x^(-alpha) shift left exponent offset {base}; expected a nonnegative integer"
        )
    offset = int(base)
    deg = max((offset + k for k in w.coeffs), default=-1)
    out = [ZERO] * (deg + 1)
    for k, c in w.coeffs.items():
        out[offset + k] = c
    return UnivariatePoly(out).scale(Fraction(1, factorial(n)))


def laguerre_recurrence(n: int, order: OrderLike) -> UnivariatePoly:
    """``(k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}`` from ``L_0 = 1``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    alpha = LaguerreOrder.coerce(order).alpha
    prev, cur = UnivariatePoly(), UnivariatePoly((1,))
    for k in range(n):
        nxt = cur.scale(2 * k + 1 + alpha) - cur.mul_x() - prev.scale(k + alpha)
        prev, cur = cur, nxt.scale(Fraction(1, k + 1))
    return cur


# Evaluation


def poly_eval(poly: UnivariatePoly, point: Fraction | int) -> QuadComplexScalar:
    """Exact Horner evaluation at a rational point."""
    return poly(Fraction(point))


def poly_eval_f(poly: UnivariatePoly, point: float) -> float:
    """Horner evaluation in double precision; coefficients must be rational."""
    if not poly.is_rational():
        raise ValueError("float evaluation needs coefficients with no sqrt2 or imaginary part")
    acc = 0.0
    for c in reversed(poly.to_fractions()):
        acc = acc * point + float(c)
    return acc


HERMITE_METHODS = {
    "operator": hermite_operator,
    "rodrigues": hermite_rodrigues,
    "recurrence": hermite_recurrence,
}

LAGUERRE_METHODS = {
    "operator": laguerre_operator,
    "sum": laguerre_sum,
    "rodrigues": laguerre_rodrigues,
    "recurrence": laguerre_recurrence,
}
