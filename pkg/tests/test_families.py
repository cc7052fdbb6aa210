from fractions import Fraction
from math import factorial

import pytest
import sympy as sp
from hypothesis import given, settings
import hypothesis.strategies as st

from conftest import X_SYM, poly_to_sympy
from hwpoly.families import (
    GaussWeightedPoly, LaguerreOrder, LaguerreWeightedPoly, falling_factorial, gbinom,
    hermite_addition_rhs, hermite_bivariate_shift, hermite_operator, hermite_recurrence,
    hermite_rodrigues, laguerre_operator, laguerre_recurrence, laguerre_rodrigues, laguerre_sum,
    poly_eval, poly_eval_f,
)
from hwpoly.poly import BivariatePoly, UnivariatePoly
from hwpoly.scalar import I, QuadComplexScalar

Y_SYM = sp.Symbol("y")
HERMITE_GENERATORS = [hermite_operator, hermite_rodrigues, hermite_recurrence]
LAGUERRE_GENERATORS = [laguerre_operator, laguerre_sum, laguerre_rodrigues, laguerre_recurrence]


def U(*coeffs):
    return UnivariatePoly(Fraction(c) for c in coeffs)


@pytest.mark.parametrize("gen", HERMITE_GENERATORS)
@pytest.mark.parametrize("n, expected", [
    (0, U(1)),
    (1, U(0, 2)),
    (2, U(-2, 0, 4)),
    (3, U(0, -12, 0, 8)),
    (4, U(12, 0, -48, 0, 16)),
    (5, U(0, 120, 0, -160, 0, 32)),
])
def test_hermite_small(gen, n, expected):
    assert gen(n) == expected


@pytest.mark.parametrize("gen", HERMITE_GENERATORS)
def test_hermite_against_sympy(gen):
    for n in range(0, 16):
        assert poly_to_sympy(gen(n)) == sp.expand(sp.hermite(n, X_SYM))


def test_hermite_rodrigues_against_direct_differentiation():
    for n in range(8):
        direct = sp.simplify((-1) ** n * sp.exp(X_SYM**2) * sp.diff(sp.exp(-X_SYM**2), X_SYM, n))
        assert sp.expand(direct) == poly_to_sympy(hermite_rodrigues(n))


@pytest.mark.parametrize("n", range(0, 25))
def test_hermite_structure(n):
    h = hermite_operator(n)
    assert h.degree == n
    assert h[n] == 2 ** n
    assert all(not h[j] for j in range(n + 1) if (n - j) % 2)
    assert h.is_rational()


def test_gauss_weighted_derivative():
    w = GaussWeightedPoly(U(0, 1))  # x e^{-x^2}
    assert w.derivative().q == U(1, 0, -2)


def test_laguerre_weighted_derivative():
    w = LaguerreWeightedPoly(Fraction(2, 3), {0: QuadComplexScalar(1)})
    d = w.derivative()
    assert d.gamma == Fraction(-1, 3)
    assert d.coeffs == {0: QuadComplexScalar(Fraction(2, 3)), 1: QuadComplexScalar(-1)}
    with pytest.raises(ValueError):
        LaguerreWeightedPoly(Fraction(0), {-1: QuadComplexScalar(1)})


@pytest.mark.parametrize("gen", LAGUERRE_GENERATORS)
@pytest.mark.parametrize("n, alpha, expected", [
    (0, 0, U(1)),
    (1, 0, U(1, -1)),
    (2, 0, U(1, -2, Fraction(1, 2))),
    (1, 1, U(2, -1)),
    (2, 1, U(3, -3, Fraction(1, 2))),
    (2, Fraction(1, 2), U(Fraction(15, 8), Fraction(-5, 2), Fraction(1, 2))),
    (1, Fraction(-1, 3), U(Fraction(2, 3), -1)),
    (0, Fraction(7, 3), U(1)),
])
def test_laguerre_small(gen, n, alpha, expected):
    assert gen(n, alpha) == expected


@pytest.mark.parametrize("alpha", ["0", "1", "5", "1/2", "-1/3", "7/3", "-5/2"])
def test_laguerre_against_sympy(alpha):
    a = sp.Rational(alpha)
    for n in range(0, 10):
        oracle = sp.expand(sp.assoc_laguerre(n, a, X_SYM))
        for gen in LAGUERRE_GENERATORS:
            assert poly_to_sympy(gen(n, alpha)) == oracle, (gen.__name__, n)


@pytest.mark.parametrize("alpha", [Fraction(0), Fraction(-1, 3), Fraction(5)])
def test_laguerre_rodrigues_against_direct_differentiation(alpha):
    a = sp.Rational(alpha.numerator, alpha.denominator)
    for n in range(6):
        inner = sp.diff(sp.exp(-X_SYM) * X_SYM ** (n + a), X_SYM, n)
        direct = sp.expand(sp.simplify(X_SYM ** (-a) * sp.exp(X_SYM) * inner / sp.factorial(n)))
        assert direct == poly_to_sympy(laguerre_rodrigues(n, alpha))


@settings(max_examples=40)
@given(st.integers(0, 12), st.fractions(min_value=-7, max_value=7, max_denominator=5))
def test_laguerre_structure(n, alpha):
    for gen in (laguerre_operator, laguerre_sum, laguerre_rodrigues):
        poly = gen(n, alpha)
        assert poly.degree == n
        assert poly[n] == Fraction((-1) ** n, factorial(n))
        assert poly[0] == gbinom(n + alpha, n)
    assert laguerre_operator(n, alpha) == laguerre_sum(n, alpha) == laguerre_rodrigues(n, alpha)


def test_laguerre_negative_integer_order():
    # alpha = -3 puts x^{-2} in the Rodrigues weight for n = 1
    assert laguerre_rodrigues(1, -3) == U(-2, -1) == laguerre_sum(1, -3)


def test_laguerre_order_rejects_float():
    with pytest.raises(TypeError):
        LaguerreOrder.coerce(0.5)
    assert str(LaguerreOrder.coerce("2/4")) == "1/2"


@pytest.mark.parametrize("gamma, m, expected", [
    (5, 2, 20), (Fraction(3, 7), 0, 1), (0, 0, 1), (Fraction(1, 2), 3, Fraction(3, 8)), (3, 5, 0),
])
def test_falling_factorial(gamma, m, expected):
    assert falling_factorial(gamma, m) == expected


@given(st.fractions(min_value=-6, max_value=6, max_denominator=4), st.integers(0, 8))
def test_falling_factorial_matches_sympy(gamma, m):
    g = sp.Rational(gamma.numerator, gamma.denominator)
    assert falling_factorial(gamma, m) == Fraction(str(sp.ff(g, m)))


def test_bivariate_shift_examples():
    assert hermite_bivariate_shift(0) == BivariatePoly({(0, 0): 1})
    assert hermite_bivariate_shift(1) == BivariatePoly({(1, 0): 2, (0, 1): 2})
    assert hermite_bivariate_shift(2) == BivariatePoly({(2, 0): 4, (1, 1): 8, (0, 2): 4, (0, 0): -2})


@pytest.mark.parametrize("n", range(0, 9))
def test_addition_rhs_against_sympy(n):
    s2 = sp.sqrt(2)
    oracle = sp.expand(sum(sp.binomial(n, k) * sp.hermite(k, s2 * X_SYM) * sp.hermite(n - k, s2 * Y_SYM)
                           for k in range(n + 1)) / s2**n)
    rhs = hermite_addition_rhs(n)
    assert not rhs.nonrational_terms()
    mine = sum(sp.Rational(str(v.to_fraction())) * X_SYM**a * Y_SYM**b for (a, b), v in rhs.terms.items())
    assert sp.expand(mine - oracle) == 0
    assert rhs == hermite_bivariate_shift(n)


def test_addition_rhs_odd_n_carries_sqrt2_internally():
    # each k-term of the sum for n=1 is a multiple of sqrt2 before the prefactor
    assert hermite_addition_rhs(1, prefactor=1) == BivariatePoly(
        {(1, 0): QuadComplexScalar(0, 2), (0, 1): QuadComplexScalar(0, 2)})


@pytest.mark.parametrize("n", range(0, 12))
def test_bivariate_diagonal(n):
    assert hermite_bivariate_shift(n).at_y_zero() == hermite_operator(n)


def test_poly_eval():
    h2, h3 = hermite_operator(2), hermite_operator(3)
    assert poly_eval(h2, 0) == -2
    assert poly_eval(h3, -1) == -poly_eval(h3, 1)
    assert poly_eval(laguerre_sum(2, 0), 0) == 1
    assert poly_eval(h3, Fraction(1, 2)) == Fraction(-5)
    assert poly_eval_f(h2, 0.0) == -2.0
    with pytest.raises(ValueError):
        poly_eval_f(UnivariatePoly([I]), 1.0)


def test_shift_parameter_gives_broken_family():
    assert hermite_operator(1, shift=1) == U(0, 1)


def test_parallel_generation_matches_sequential():
    from concurrent.futures import ThreadPoolExecutor
    from hwpoly import families
    families._shifted_momentum_powers.clear()
    ns = list(range(40, -1, -1)) * 3
    with ThreadPoolExecutor(max_workers=8) as pool:
        parallel = list(pool.map(hermite_operator, ns))
    assert parallel == [hermite_recurrence(n) for n in ns]
