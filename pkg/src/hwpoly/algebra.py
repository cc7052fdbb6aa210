"""Normal-ordered polynomials in the Heisenberg-Weyl algebra ``[x, p] = i``.

Every operator is stored as ``sum c_ab(t) * x**a p**b`` with all ``x`` to the
left of all ``p``.  The coefficient ``c_ab(t)`` is a polynomial in a formal
grading parameter ``t`` (:class:`ScalarGradePoly`); grade-zero operators are
the ordinary ones, while positive grades let exponentials be truncated order by
order.
"""

from __future__ import annotations

from math import comb, factorial
from typing import Iterable, Iterator, Mapping

from .poly import UnivariatePoly
from .report import CheckReport
from .scalar import I, ONE, ZERO, QuadComplexScalar, ScalarLike

_coerce = QuadComplexScalar.coerce

DEFAULT_MAX_DEPTH = 64


class GradingError(ValueError):
    """An operation received an operator with an unsupported grade profile."""


class NonTerminatingSeriesError(ArithmeticError):
    """The nested-commutator series did not vanish within ``max_depth`` terms."""

    def __init__(self, max_depth: int) -> None:
        super().__init__(f"nested commutator series did not terminate within {max_depth} terms")
        self.max_depth = max_depth


class ScalarGradePoly:
    """Polynomial in the grading parameter ``t`` with Q(i, sqrt2) coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike] = ()) -> None:
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[QuadComplexScalar, ...] = tuple(cs)

    @classmethod
    def _trusted(cls, cs: list[QuadComplexScalar]) -> ScalarGradePoly:
        while cs and not cs[-1]:
            cs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def monomial(cls, value: ScalarLike, grade: int = 0) -> ScalarGradePoly:
        return cls([ZERO] * grade + [_coerce(value)])

    def __getitem__(self, g: int) -> QuadComplexScalar:
        return self.coeffs[g] if 0 <= g < len(self.coeffs) else ZERO

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ScalarGradePoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"ScalarGradePoly([{', '.join(str(c) for c in self.coeffs)}])"

    @property
    def max_grade(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def min_grade(self) -> int | None:
        return next((g for g, c in enumerate(self.coeffs) if c), None)

    def __add__(self, other: ScalarGradePoly) -> ScalarGradePoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for g, c in enumerate(b):
            out[g] = out[g] + c
        return ScalarGradePoly._trusted(out)

    def __neg__(self) -> ScalarGradePoly:
        return ScalarGradePoly._trusted([-c for c in self.coeffs])

    def __sub__(self, other: ScalarGradePoly) -> ScalarGradePoly:
        return self + (-other)

    def multiply(self, other: ScalarGradePoly, max_grade: int | None = None) -> ScalarGradePoly:
        if not self.coeffs or not other.coeffs:
            return ScalarGradePoly()
        size = len(self.coeffs) + len(other.coeffs) - 1
        if max_grade is not None:
            size = min(size, max_grade + 1)
        out = [ZERO] * max(size, 0)
        for g, u in enumerate(self.coeffs):
            if g >= size or not u:
                continue
            for h, v in enumerate(other.coeffs):
                if g + h >= size:
                    break
                if v:
                    out[g + h] = out[g + h] + u * v
        return ScalarGradePoly._trusted(out)

    __mul__ = multiply

    def scale(self, s: ScalarLike) -> ScalarGradePoly:
        s = _coerce(s)
        return ScalarGradePoly._trusted([c * s for c in self.coeffs])

    def _scale_int_ipow(self, k: int, j: int) -> ScalarGradePoly:
        return ScalarGradePoly._trusted([c.scale_int(k).times_i_power(j) for c in self.coeffs])

    def truncate(self, max_grade: int) -> ScalarGradePoly:
        return ScalarGradePoly._trusted(list(self.coeffs[: max_grade + 1]))

    def shift(self, k: int) -> ScalarGradePoly:
        """Multiply by ``t**k``."""
        return ScalarGradePoly._trusted([ZERO] * k + list(self.coeffs)) if self else self


Monomial = tuple[int, int]


class OperatorPoly:
    """Canonical normal-ordered operator; keys are ``(xdeg, pdeg)``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, ScalarGradePoly | ScalarLike] | None = None) -> None:
        clean: dict[Monomial, ScalarGradePoly] = {}
        for (a, b), value in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError(f"negative degree in monomial {(a, b)}")
            if not isinstance(value, ScalarGradePoly):
                value = ScalarGradePoly.monomial(value)
            if value:
                clean[(int(a), int(b))] = value
        self._terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, terms: dict[Monomial, ScalarGradePoly]) -> OperatorPoly:
        obj = cls.__new__(cls)
        obj._terms = {k: v for k, v in terms.items() if v}
        obj._hash = None
        return obj

    @classmethod
    def scalar(cls, value: ScalarLike, grade: int = 0) -> OperatorPoly:
        return cls({(0, 0): ScalarGradePoly.monomial(value, grade)})

    @classmethod
    def monomial(cls, xdeg: int, pdeg: int, value: ScalarLike = 1, grade: int = 0) -> OperatorPoly:
        return cls({(xdeg, pdeg): ScalarGradePoly.monomial(value, grade)})

    # mapping-like access

    def items(self) -> Iterator[tuple[Monomial, ScalarGradePoly]]:
        return iter(self._terms.items())

    def keys(self) -> Iterator[Monomial]:
        return iter(self._terms)

    def __getitem__(self, key: Monomial) -> ScalarGradePoly:
        return self._terms.get(key, ScalarGradePoly())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, OperatorPoly):
            return self._terms == other._terms
        if isinstance(other, (int, QuadComplexScalar)) or hasattr(other, "denominator"):
            return self == OperatorPoly.scalar(other)  # type: ignore[arg-type]
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v!r}" for k, v in sorted(self._terms.items()))
        return f"OperatorPoly({{{body}}})"

    # grading

    @property
    def max_grade(self) -> int | None:
        return max((c.max_grade for c in self._terms.values()), default=None)

    @property
    def min_grade(self) -> int | None:
        return min((c.min_grade for c in self._terms.values()), default=None)

    def is_grade_zero(self) -> bool:
        return all(len(c.coeffs) == 1 for c in self._terms.values())

    def grade_component(self, g: int) -> OperatorPoly:
        """The coefficient of ``t**g`` as a grade-zero operator."""
        return OperatorPoly._trusted(
            {k: ScalarGradePoly._trusted([c[g]]) for k, c in self._terms.items()}
        )

    def truncate(self, max_grade: int) -> OperatorPoly:
        return OperatorPoly._trusted({k: c.truncate(max_grade) for k, c in self._terms.items()})

    def shift_grade(self, k: int = 1) -> OperatorPoly:
        """Multiply by ``t**k``."""
        return OperatorPoly._trusted({m: c.shift(k) for m, c in self._terms.items()})

    # arithmetic

    def __add__(self, other: OperatorPoly | ScalarLike) -> OperatorPoly:
        if not isinstance(other, OperatorPoly):
            other = OperatorPoly.scalar(other)
        terms = dict(self._terms)
        for key, value in other._terms.items():
            terms[key] = terms[key] + value if key in terms else value
        return OperatorPoly._trusted(terms)

    __radd__ = __add__

    def __neg__(self) -> OperatorPoly:
        return OperatorPoly._trusted({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: OperatorPoly | ScalarLike) -> OperatorPoly:
        if not isinstance(other, OperatorPoly):
            other = OperatorPoly.scalar(other)
        return self + (-other)

    def __rsub__(self, other: ScalarLike) -> OperatorPoly:
        return (-self) + other

    def scale(self, s: ScalarLike) -> OperatorPoly:
        s = _coerce(s)
        if not s:
            return OperatorPoly()
        return OperatorPoly._trusted({k: v.scale(s) for k, v in self._terms.items()})

    def __mul__(self, other: OperatorPoly | ScalarLike) -> OperatorPoly:
        if isinstance(other, OperatorPoly):
            return op_normal_product(self, other)
        return self.scale(other)

    def __rmul__(self, other: ScalarLike) -> OperatorPoly:
        return self.scale(other)

    def __truediv__(self, other: ScalarLike) -> OperatorPoly:
        return self.scale(ONE / _coerce(other))

    def __pow__(self, n: int) -> OperatorPoly:
        return op_power(self, n)


X = OperatorPoly.monomial(1, 0)
P = OperatorPoly.monomial(0, 1)
IDENTITY = OperatorPoly.scalar(1)


def op_normal_product(A: OperatorPoly, B: OperatorPoly, max_grade: int | None = None) -> OperatorPoly:
    """Normal-ordered product ``A*B``, optionally truncated to grades ``<= max_grade``.

    Uses ``x^a p^b * x^c p^d = sum_j (-i)^j j! C(b,j) C(c,j) x^(a+c-j) p^(b+d-j)``.
    """
    out: dict[Monomial, ScalarGradePoly] = {}
    for (a, b), u in A._terms.items():
        for (c, d), v in B._terms.items():
            uv = u.multiply(v, max_grade)
            if not uv:
                continue
            for j in range(min(b, c) + 1):
                coeff = uv if j == 0 else uv._scale_int_ipow(factorial(j) * comb(b, j) * comb(c, j), -j)
                key = (a + c - j, b + d - j)
                out[key] = out[key] + coeff if key in out else coeff
    return OperatorPoly._trusted(out)


def commutator(A: OperatorPoly, B: OperatorPoly, max_grade: int | None = None) -> OperatorPoly:
    return op_normal_product(A, B, max_grade) - op_normal_product(B, A, max_grade)


def op_power(A: OperatorPoly, n: int, max_grade: int | None = None) -> OperatorPoly:
    if n < 0:
        raise ValueError("operator powers must be nonnegative")
    result = IDENTITY if max_grade is None else IDENTITY.truncate(max_grade)
    for _ in range(n):
        result = op_normal_product(result, A, max_grade)
    return result


def ad_series(A: OperatorPoly, B: OperatorPoly, max_depth: int = DEFAULT_MAX_DEPTH) -> list[OperatorPoly]:
    """Nonzero terms ``B, [A,B], [A,[A,B]], ...`` up to the first vanishing one."""
    terms: list[OperatorPoly] = []
    current = B
    while current:
        if len(terms) == max_depth:
            raise NonTerminatingSeriesError(max_depth)
        terms.append(current)
        current = commutator(A, current)
    return terms


def similarity_conjugate(A: OperatorPoly, B: OperatorPoly, mu: ScalarLike = 1,
                         max_depth: int = DEFAULT_MAX_DEPTH) -> OperatorPoly:
    """``e^{mu A} B e^{-mu A}`` summed exactly as a terminating commutator series."""
    mu = _coerce(mu)
    result = OperatorPoly()
    weight = ONE
    for k, term in enumerate(ad_series(A, B, max_depth)):
        if k:
            weight = weight * mu / k
        result = result + term.scale(weight)
    return result


def apply_to_constant(A: OperatorPoly) -> UnivariatePoly:
    """Act with ``A`` on the constant function 1: every ``p``-bearing term drops out."""
    if not A.is_grade_zero():
        raise GradingError("apply_to_constant needs an operator with grade-0 coefficients only")
    surviving = {a: c[0] for (a, b), c in A.items() if b == 0}
    deg = max(surviving, default=-1)
    return UnivariatePoly(surviving.get(k, ZERO) for k in range(deg + 1))


def graded_exp(A: OperatorPoly, N: int) -> OperatorPoly:
    """``sum_k A^k / k!`` truncated to grades ``<= N``; ``A`` must have no grade-0 part."""
    if A and A.min_grade == 0:
        raise GradingError("graded_exp needs every term of the exponent at grade >= 1")
    result = IDENTITY
    term = IDENTITY
    for k in range(1, N + 1):
        term = op_normal_product(term, A, N).scale(QuadComplexScalar(1) / k)
        if not term:
            break
        result = result + term
    return result


def _first_grade_difference(lhs: OperatorPoly, rhs: OperatorPoly) -> str | None:
    diff = lhs - rhs
    if not diff:
        return None
    grade = diff.min_grade
    component = diff.grade_component(grade)
    key = min(component.keys(), key=lambda m: (m[0] + m[1], m[0]))
    return (
        f"grade {grade}, monomial x^{key[0]} p^{key[1]}: "
        f"lhs={lhs[key][grade].components_str()}, rhs={rhs[key][grade].components_str()}"
    )


def bch_factorize_check(A: OperatorPoly, B: OperatorPoly, N: int) -> CheckReport:
    """Check ``e^{A+B} = e^{-[A,B]/2} e^A e^B`` through grade ``N``.

    Reports ``hypothesis_violated`` when ``[A,B]`` fails to commute with both
    ``A`` and ``B``, in which case the factorization is not expected to hold.
    """
    from .opexpr import format_graded

    params = {"A": format_graded(A), "B": format_graded(B), "N": str(N)}
    for name, op in (("A", A), ("B", B)):
        if op and op.min_grade == 0:
            raise GradingError(f"{name} must have every term at grade >= 1")
    C = commutator(A, B)
    for name, op in (("A", A), ("B", B)):
        nested = commutator(op, C)
        if nested:
            return CheckReport.fail(
                "bch_factorization", params,
                f"hypothesis violated: [{name},[A,B]] = {format_graded(nested)} is nonzero",
                hypothesis_violated=True,
            )
    lhs = graded_exp(A + B, N)
    rhs = op_normal_product(
        op_normal_product(graded_exp(C.scale(QuadComplexScalar(-1, 0) / 2), N), graded_exp(A, N), N),
        graded_exp(B, N),
        N,
    )
    detail = _first_grade_difference(lhs, rhs)
    if detail is not None:
        return CheckReport.fail("bch_factorization", params, detail)
    return CheckReport.ok("bch_factorization", params)


__all__ = [
    "DEFAULT_MAX_DEPTH", "GradingError", "NonTerminatingSeriesError", "ScalarGradePoly",
    "OperatorPoly", "X", "P", "IDENTITY", "I", "op_normal_product", "commutator", "op_power",
    "ad_series", "similarity_conjugate", "apply_to_constant", "graded_exp", "bch_factorize_check",
]
