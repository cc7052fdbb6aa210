"""Exact univariate and bivariate polynomials over Q(i, sqrt2)."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Mapping

from .scalar import ONE, ZERO, QuadComplexScalar, ScalarLike

_coerce = QuadComplexScalar.coerce


class UnivariatePoly:
    """Polynomial in one variable; ``coeffs[k]`` multiplies ``x**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike] = ()) -> None:
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[QuadComplexScalar, ...] = tuple(cs)

    @classmethod
    def x(cls) -> UnivariatePoly:
        return cls((0, 1))

    @classmethod
    def constant(cls, value: ScalarLike) -> UnivariatePoly:
        return cls((value,))

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def __getitem__(self, k: int) -> QuadComplexScalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[QuadComplexScalar]:
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UnivariatePoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UnivariatePoly([{', '.join(str(c) for c in self.coeffs)}])"

    def __add__(self, other: UnivariatePoly) -> UnivariatePoly:
        n = max(len(self), len(other))
        return UnivariatePoly(self[k] + other[k] for k in range(n))

    def __sub__(self, other: UnivariatePoly) -> UnivariatePoly:
        n = max(len(self), len(other))
        return UnivariatePoly(self[k] - other[k] for k in range(n))

    def __neg__(self) -> UnivariatePoly:
        return UnivariatePoly(-c for c in self.coeffs)

    def __mul__(self, other: UnivariatePoly | ScalarLike) -> UnivariatePoly:
        if not isinstance(other, UnivariatePoly):
            return self.scale(other)
        if not self or not other:
            return UnivariatePoly()
        out = [ZERO] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UnivariatePoly(out)

    def __rmul__(self, other: ScalarLike) -> UnivariatePoly:
        return self.scale(other)

    def scale(self, s: ScalarLike) -> UnivariatePoly:
        s = _coerce(s)
        return UnivariatePoly(c * s for c in self.coeffs)

    def mul_x(self) -> UnivariatePoly:
        return UnivariatePoly((ZERO, *self.coeffs)) if self else self

    def derivative(self) -> UnivariatePoly:
        return UnivariatePoly(c.scale_int(k) for k, c in enumerate(self.coeffs) if k)

    def rescale_argument(self, s: ScalarLike) -> UnivariatePoly:
        """Return ``q(s*x)``."""
        s = _coerce(s)
        out, power = [], ONE
        for c in self.coeffs:
            out.append(c * power)
            power = power * s
        return UnivariatePoly(out)

    def __call__(self, point: ScalarLike) -> QuadComplexScalar:
        point = _coerce(point)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def to_fractions(self) -> list[Fraction]:
        return [c.to_fraction() for c in self.coeffs]


Monomial2 = tuple[int, int]


class BivariatePoly:
    """Sparse polynomial in ``x`` and ``y``; keys are ``(xdeg, ydeg)``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial2, ScalarLike] | None = None) -> None:
        clean: dict[Monomial2, QuadComplexScalar] = {}
        for key, value in (terms or {}).items():
            value = _coerce(value)
            if value:
                clean[key] = value
        self.terms = clean

    @classmethod
    def from_univariate(cls, poly: UnivariatePoly, var: str = "x") -> BivariatePoly:
        if var not in ("x", "y"):
            raise ValueError("var must be 'x' or 'y'")
        if var == "x":
            return cls({(k, 0): c for k, c in enumerate(poly.coeffs)})
        return cls({(0, k): c for k, c in enumerate(poly.coeffs)})

    @classmethod
    def shifted(cls, poly: UnivariatePoly) -> BivariatePoly:
        """Expand ``q(x + y)`` by the binomial theorem."""
        terms: dict[Monomial2, QuadComplexScalar] = {}
        for j, c in enumerate(poly.coeffs):
            if not c:
                continue
            for k in range(j + 1):
                terms[(k, j - k)] = terms.get((k, j - k), ZERO) + c.scale_int(comb(j, k))
        return cls(terms)

    def __getitem__(self, key: Monomial2) -> QuadComplexScalar:
        return self.terms.get(key, ZERO)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BivariatePoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v}" for k, v in self.sorted_items())
        return f"BivariatePoly({{{body}}})"

    def sorted_items(self) -> list[tuple[Monomial2, QuadComplexScalar]]:
        """Graded-lex: total degree ascending, then x-degree descending."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], -kv[0][0]))

    def __add__(self, other: BivariatePoly) -> BivariatePoly:
        terms = dict(self.terms)
        for key, value in other.terms.items():
            terms[key] = terms.get(key, ZERO) + value
        return BivariatePoly(terms)

    def __sub__(self, other: BivariatePoly) -> BivariatePoly:
        return self + other.scale(-1)

    def __mul__(self, other: BivariatePoly | ScalarLike) -> BivariatePoly:
        if not isinstance(other, BivariatePoly):
            return self.scale(other)
        terms: dict[Monomial2, QuadComplexScalar] = {}
        for (a, b), u in self.terms.items():
            for (c, d), v in other.terms.items():
                key = (a + c, b + d)
                terms[key] = terms.get(key, ZERO) + u * v
        return BivariatePoly(terms)

    def scale(self, s: ScalarLike) -> BivariatePoly:
        s = _coerce(s)
        return BivariatePoly({k: v * s for k, v in self.terms.items()})

    def at_y_zero(self) -> UnivariatePoly:
        deg = max((a for (a, b) in self.terms if b == 0), default=-1)
        return UnivariatePoly(self[(k, 0)] for k in range(deg + 1))

    def nonrational_terms(self) -> list[tuple[Monomial2, QuadComplexScalar]]:
        """Terms carrying a sqrt2 or imaginary component, in graded-lex order."""
        return [(k, v) for k, v in self.sorted_items() if not v.is_rational()]
