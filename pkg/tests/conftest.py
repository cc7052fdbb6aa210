from fractions import Fraction

import hypothesis
import hypothesis.strategies as st
import pytest
import sympy as sp

from hwpoly.algebra import OperatorPoly, ScalarGradePoly
from hwpoly.scalar import QuadComplexScalar

hypothesis.settings.register_profile("ci", max_examples=60, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile("ci")

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def scalars(draw, nonzero=False, rational=False):
    if rational:
        comps = (draw(small_fractions), 0, 0, 0)
    else:
        comps = tuple(draw(small_fractions) for _ in range(4))
    s = QuadComplexScalar(*comps)
    if nonzero:
        hypothesis.assume(bool(s))
    return s


@st.composite
def operators(draw, max_degree=3, max_terms=5, max_grade=0):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        a = draw(st.integers(0, max_degree))
        b = draw(st.integers(0, max_degree - a))
        g = draw(st.integers(0, max_grade))
        terms[(a, b)] = ScalarGradePoly.monomial(draw(scalars()), g)
    return OperatorPoly(terms)


X_SYM = sp.Symbol("x")
F = sp.Function("f")(X_SYM)


def to_sympy(s: QuadComplexScalar):
    a, b, c, d = (sp.Rational(v.numerator, v.denominator) for v in s.components)
    return a + b * sp.sqrt(2) + (c + d * sp.sqrt(2)) * sp.I


def act(op: OperatorPoly, f=F):
    """Apply a grade-0 operator as the differential operator sum c x^a (-i d/dx)^b."""
    total = 0
    for (a, b), coeff in op.items():
        total += to_sympy(coeff[0]) * X_SYM**a * (-sp.I) ** b * sp.diff(f, X_SYM, b)
    return sp.expand(total)


def poly_to_sympy(poly):
    return sp.expand(sum(to_sympy(c) * X_SYM**k for k, c in enumerate(poly.coeffs)))


@pytest.fixture
def frac():
    return Fraction


_CRITERIA: list[str] = []


class _Criterion:
    def __init__(self, label: str) -> None:
        self.label = label
        self.notes: list[str] = []

    def note(self, text: str) -> None:
        self.notes.append(text)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        detail = "; ".join(self.notes)
        _CRITERIA.append(f"{status} {self.label}" + (f" ({detail})" if detail else ""))
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
