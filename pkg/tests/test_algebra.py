import pytest
import sympy as sp
from hypothesis import given, settings

from conftest import F, X_SYM, act, operators, poly_to_sympy, scalars
from hwpoly.algebra import (
    IDENTITY, P, X, GradingError, NonTerminatingSeriesError, OperatorPoly, ScalarGradePoly,
    ad_series, apply_to_constant, bch_factorize_check, commutator, graded_exp,
    op_normal_product, op_power, similarity_conjugate,
)
from hwpoly.poly import UnivariatePoly
from hwpoly.scalar import I, QuadComplexScalar


def mono(a, b, c=1, g=0):
    return OperatorPoly.monomial(a, b, c, g)


def test_px_reorders():
    assert op_normal_product(P, X) == X * P - I
    assert op_normal_product(X, P) == mono(1, 1)


def test_p2_x():
    assert op_normal_product(P * P, X) == mono(1, 2) + mono(0, 1, -2 * I)


def test_commutators():
    assert commutator(X, P) == OperatorPoly.scalar(I)
    assert commutator(X, X * X) == OperatorPoly()
    assert commutator(X * X, P) == mono(1, 0, 2 * I)


def test_powers_of_shifted_momentum():
    A = P + X.scale(2 * I)
    assert op_power(A, 0) == IDENTITY
    assert op_power(A, 1) == A
    assert op_power(A, 2) == mono(0, 2) + mono(1, 1, 4 * I) + mono(2, 0, -4) + 2


def test_similarity_examples():
    assert similarity_conjugate(X * X, P, 1) == P + X.scale(2 * I)
    assert len(ad_series(X * X, P)) == 2
    assert similarity_conjugate(X, P, 1) == P + I
    assert similarity_conjugate(X, X, 1) == X


def test_similarity_matches_differential_conjugation():
    # e^{x^2} p (e^{-x^2} f) computed directly on a generic f
    direct = sp.expand(sp.simplify(sp.exp(X_SYM**2) * act(P, sp.exp(-X_SYM**2) * F)))
    assert sp.simplify(direct - act(similarity_conjugate(X * X, P, 1))) == 0


def test_similarity_nonterminating():
    with pytest.raises(NonTerminatingSeriesError):
        similarity_conjugate(X * P, X, 1, max_depth=10)


def test_similarity_with_scalar_mu():
    mu = QuadComplexScalar(0, 1)  # sqrt2
    assert similarity_conjugate(X, P, mu) == P + I * mu


def test_apply_to_constant():
    assert apply_to_constant(P) == UnivariatePoly()
    assert apply_to_constant(X * X) == UnivariatePoly((0, 0, 1))
    A2 = op_power(P + X.scale(2 * I), 2)
    assert apply_to_constant(A2) == UnivariatePoly((2, 0, -4))
    with pytest.raises(GradingError):
        apply_to_constant(X.shift_grade(1))


def test_graded_exp_commuting():
    e = graded_exp(X.shift_grade(1), 2)
    assert e == IDENTITY + X.shift_grade(1) + (X * X).scale(QuadComplexScalar(1) / 2).shift_grade(2)
    assert graded_exp(OperatorPoly(), 5) == IDENTITY
    with pytest.raises(GradingError):
        graded_exp(X, 3)


def test_graded_exp_grade_two():
    A = X.scale(2) - P.scale(I)
    e = graded_exp(A.shift_grade(1), 2)
    half_square = op_normal_product(A, A).scale(QuadComplexScalar(1) / 2)
    assert e.grade_component(2) == half_square
    # by hand: 2x^2 - 2i xp - p^2/2 - 1
    assert half_square == mono(2, 0, 2) + mono(1, 1, -2 * I) + mono(0, 2, QuadComplexScalar(-1) / 2) - 1


def test_graded_exp_generates_hermite():
    # grade n of exp(t(2x - ip)) acting on 1 is H_n / n!
    from math import factorial
    from hwpoly.families import hermite_recurrence
    e = graded_exp((X.scale(2) - P.scale(I)).shift_grade(1), 10)
    for n in range(11):
        assert apply_to_constant(e.grade_component(n)) == hermite_recurrence(n).scale(QuadComplexScalar(1) / factorial(n))


def test_bch_examples():
    t = lambda op: op.shift_grade(1)
    A, B = t(X.scale(2)), t(P.scale(-I))
    assert commutator(A, B) == OperatorPoly.scalar(2, grade=2)
    assert bch_factorize_check(A, B, 12).passed
    assert bch_factorize_check(t(X), t(X), 4).passed
    r = bch_factorize_check(t(X * X), t(P), 3)
    assert not r.passed and r.hypothesis_violated and r.status == "hypothesis violated"
    assert commutator(t(P), commutator(t(X * X), t(P))) == OperatorPoly.scalar(2, grade=3)


def test_bch_central_commutator_pair():
    # [tx, t(x+p)] = i t^2 is central, so the factorization applies
    A = X.shift_grade(1)
    B = (X + P).shift_grade(1)
    assert commutator(A, B) == OperatorPoly.scalar(I, grade=2)
    assert bch_factorize_check(A, B, 6).passed


def test_graded_exp_matches_brute_force():
    A = (X + P).shift_grade(1)
    brute = IDENTITY
    term = IDENTITY
    for k in range(1, 5):
        term = op_normal_product(term, A).scale(QuadComplexScalar(1) / k).truncate(4)
        brute = brute + term
    assert graded_exp(A, 4) == brute


def test_grade_difference_reports_smallest_grade():
    from hwpoly.algebra import _first_grade_difference
    lhs = graded_exp(X.shift_grade(1), 4)
    rhs = lhs + mono(0, 1, 5, g=3) + mono(2, 0, 1, g=4)
    detail = _first_grade_difference(lhs, rhs)
    assert detail.startswith("grade 3, monomial x^0 p^1")
    assert _first_grade_difference(lhs, lhs) is None


@settings(max_examples=40)
@given(operators(max_degree=2, max_terms=3), operators(max_degree=2, max_terms=3),
       operators(max_degree=2, max_terms=3))
def test_product_associative(a, b, c):
    assert op_normal_product(op_normal_product(a, b), c) == op_normal_product(a, op_normal_product(b, c))


@settings(max_examples=15, deadline=None)
@given(operators(max_degree=3, max_terms=3), operators(max_degree=3, max_terms=3))
def test_product_matches_differential_operators(a, b):
    assert sp.expand(act(op_normal_product(a, b)) - act(a, act(b))) == 0


@settings(max_examples=40)
@given(operators(max_degree=2, max_terms=3), operators(max_degree=2, max_terms=3),
       operators(max_degree=2, max_terms=3), scalars())
def test_commutator_bilinear_antisymmetric_jacobi(a, b, c, s):
    assert commutator(a, b) == -commutator(b, a)
    assert commutator(a + b.scale(s), c) == commutator(a, c) + commutator(b, c).scale(s)
    jacobi = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b))
    assert not jacobi


@given(operators(max_degree=2, max_terms=3), operators(max_degree=2, max_terms=3),
       operators(max_degree=2, max_terms=3), operators(max_degree=2, max_terms=3))
def test_canonical_form_independent_of_association(a, b, c, d):
    left = op_normal_product(op_normal_product(op_normal_product(a, b), c), d)
    mid = op_normal_product(op_normal_product(a, op_normal_product(b, c)), d)
    right = op_normal_product(a, op_normal_product(b, op_normal_product(c, d)))
    assert left._terms == mid._terms == right._terms


@settings(max_examples=30)
@given(operators(max_degree=3, max_terms=3), operators(max_degree=3, max_terms=3))
def test_conjugation_is_multiplicative(b, c):
    # ad_{x^2} lowers the p-degree, so every series terminates
    A = X * X
    lhs = similarity_conjugate(A, op_normal_product(b, c), 1)
    rhs = op_normal_product(similarity_conjugate(A, b, 1), similarity_conjugate(A, c, 1))
    assert lhs == rhs


def test_conjugation_of_momentum_powers():
    for n in range(8):
        assert similarity_conjugate(X, op_power(P, n), 1) == op_power(P + I, n)


@given(operators(max_degree=3), operators(max_degree=3), scalars())
def test_apply_to_constant_linear(a, b, s):
    assert apply_to_constant(a + b.scale(s)) == apply_to_constant(a) + apply_to_constant(b).scale(s)


def test_scalar_grade_poly_trims():
    assert ScalarGradePoly([1, 0, 0]).coeffs == (QuadComplexScalar(1),)
    assert not ScalarGradePoly([0, 0])
    assert ScalarGradePoly.monomial(3, 2).min_grade == 2
