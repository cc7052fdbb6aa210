"""Exact arithmetic in the number field Q(i, sqrt2).

A value is ``(a + b*sqrt2) + (c + d*sqrt2)*i`` with rational ``a, b, c, d``.
Internally the four components share one positive denominator so that a
product costs sixteen integer multiplications and a single gcd pass; the
public ``a``..``d`` accessors hand back reduced :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Union

ScalarLike = Union["QuadComplexScalar", int, Fraction]


def _reduce(na: int, nb: int, nc: int, nd: int, den: int) -> tuple[int, int, int, int, int]:
    if den < 0:
        na, nb, nc, nd, den = -na, -nb, -nc, -nd, -den
    if not (na or nb or nc or nd):
        return 0, 0, 0, 0, 1
    g = gcd(gcd(gcd(na, nb), gcd(nc, nd)), den)
    if g != 1:
        na, nb, nc, nd, den = na // g, nb // g, nc // g, nd // g, den // g
    return na, nb, nc, nd, den


class QuadComplexScalar:
    """Immutable element of Q(i, sqrt2)."""

    __slots__ = ("_n", "_den", "_hash")

    def __init__(self, a: int | Fraction = 0, b: int | Fraction = 0,
                 c: int | Fraction = 0, d: int | Fraction = 0) -> None:
        fa, fb, fc, fd = (Fraction(v) for v in (a, b, c, d))
        den = 1
        for f in (fa, fb, fc, fd):
            den = den * f.denominator // gcd(den, f.denominator)
        nums = tuple(f.numerator * (den // f.denominator) for f in (fa, fb, fc, fd))
        self._set(*_reduce(*nums, den))

    def _set(self, na: int, nb: int, nc: int, nd: int, den: int) -> None:
        self._n = (na, nb, nc, nd)
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, na: int, nb: int, nc: int, nd: int, den: int) -> QuadComplexScalar:
        obj = cls.__new__(cls)
        obj._set(*_reduce(na, nb, nc, nd, den))
        return obj

    @classmethod
    def coerce(cls, value: ScalarLike) -> QuadComplexScalar:
        if isinstance(value, QuadComplexScalar):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(value, int):
            return cls._raw(value, 0, 0, 0, 1)
        if isinstance(value, Rational):
            return cls._raw(int(value.numerator), 0, 0, 0, int(value.denominator))
        raise TypeError(f"cannot interpret {value!r} as an element of Q(i, sqrt2)")

    # components

    @property
    def a(self) -> Fraction:
        return Fraction(self._n[0], self._den)

    @property
    def b(self) -> Fraction:
        return Fraction(self._n[1], self._den)

    @property
    def c(self) -> Fraction:
        return Fraction(self._n[2], self._den)

    @property
    def d(self) -> Fraction:
        return Fraction(self._n[3], self._den)

    @property
    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.a, self.b, self.c, self.d

    def is_rational(self) -> bool:
        """True when the sqrt2 and imaginary components all vanish."""
        _, nb, nc, nd = self._n
        return not (nb or nc or nd)

    def is_real(self) -> bool:
        return not (self._n[2] or self._n[3])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self.components_str()} is not rational")
        return Fraction(self._n[0], self._den)

    def __float__(self) -> float:
        return float(self.to_fraction())

    def to_complex(self) -> complex:
        na, nb, nc, nd = self._n
        r2 = 2 ** 0.5
        return complex((na + nb * r2) / self._den, (nc + nd * r2) / self._den)

    # arithmetic

    def __bool__(self) -> bool:
        return any(self._n)

    def __neg__(self) -> QuadComplexScalar:
        na, nb, nc, nd = self._n
        obj = QuadComplexScalar.__new__(QuadComplexScalar)
        obj._set(-na, -nb, -nc, -nd, self._den)
        return obj

    def __add__(self, other: ScalarLike) -> QuadComplexScalar:
        try:
            o = QuadComplexScalar.coerce(other)
        except TypeError:
            return NotImplemented
        d1, d2 = self._den, o._den
        x, y = self._n, o._n
        if d1 == d2:
            return QuadComplexScalar._raw(x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3], d1)
        return QuadComplexScalar._raw(
            x[0] * d2 + y[0] * d1, x[1] * d2 + y[1] * d1,
            x[2] * d2 + y[2] * d1, x[3] * d2 + y[3] * d1, d1 * d2,
        )

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> QuadComplexScalar:
        try:
            return self + (-QuadComplexScalar.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other: ScalarLike) -> QuadComplexScalar:
        return (-self) + other

    def __mul__(self, other: ScalarLike) -> QuadComplexScalar:
        try:
            o = QuadComplexScalar.coerce(other)
        except TypeError:
            return NotImplemented
        a1, b1, c1, d1 = self._n
        a2, b2, c2, d2 = o._n
        # (A1 + C1 i)(A2 + C2 i) with A = a + b sqrt2, C = c + d sqrt2
        ra = a1 * a2 + 2 * b1 * b2 - (c1 * c2 + 2 * d1 * d2)
        rb = a1 * b2 + b1 * a2 - (c1 * d2 + d1 * c2)
        rc = a1 * c2 + 2 * b1 * d2 + c1 * a2 + 2 * d1 * b2
        rd = a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2
        return QuadComplexScalar._raw(ra, rb, rc, rd, self._den * o._den)

    __rmul__ = __mul__

    def scale_int(self, k: int) -> QuadComplexScalar:
        na, nb, nc, nd = self._n
        return QuadComplexScalar._raw(na * k, nb * k, nc * k, nd * k, self._den)

    def times_i_power(self, j: int) -> QuadComplexScalar:
        """Multiply by ``i**j`` (j may be negative)."""
        na, nb, nc, nd = self._n
        j %= 4
        if j == 0:
            return self
        if j == 1:
            n = (-nc, -nd, na, nb)
        elif j == 2:
            n = (-na, -nb, -nc, -nd)
        else:
            n = (nc, nd, -na, -nb)
        obj = QuadComplexScalar.__new__(QuadComplexScalar)
        obj._set(*n, self._den)
        return obj

    def inverse(self) -> QuadComplexScalar:
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(i, sqrt2)")
        # 1/(u + v i) = (u - v i) / (u^2 + v^2), u, v in Q(sqrt2)
        na, nb, nc, nd = self._n
        e = na * na + 2 * nb * nb + nc * nc + 2 * nd * nd
        f = 2 * na * nb + 2 * nc * nd
        # 1/(e + f sqrt2) = (e - f sqrt2) / (e^2 - 2 f^2)
        norm = e * e - 2 * f * f
        den = self._den
        # self = (u + v i)/den, so 1/self = den * (u - v i)(e - f sqrt2) / norm
        ua, ub, va, vb = na, nb, -nc, -nd
        ra = ua * e - 2 * ub * f
        rb = ub * e - ua * f
        rc = va * e - 2 * vb * f
        rd = vb * e - va * f
        return QuadComplexScalar._raw(ra * den, rb * den, rc * den, rd * den, norm)

    def __truediv__(self, other: ScalarLike) -> QuadComplexScalar:
        try:
            o = QuadComplexScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero in Q(i, sqrt2)")
        if o.is_rational():
            na, nb, nc, nd = self._n
            on, od = o._n[0], o._den
            return QuadComplexScalar._raw(na * od, nb * od, nc * od, nd * od, self._den * on)
        return self * o.inverse()

    def __rtruediv__(self, other: ScalarLike) -> QuadComplexScalar:
        return QuadComplexScalar.coerce(other) / self

    def __pow__(self, n: int) -> QuadComplexScalar:
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadComplexScalar):
            return self._n == other._n and self._den == other._den
        try:
            o = QuadComplexScalar.coerce(other)  # type: ignore[arg-type]
        except TypeError:
            return NotImplemented
        return self._n == o._n and self._den == o._den

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._n[0], self._den))
            else:
                self._hash = hash((self._n, self._den))
        return self._hash

    # text

    def components_str(self) -> str:
        """Fixed ``a + b√2 + (c + d√2)i`` rendering used in failure reports."""
        a, b, c, d = (str(v) for v in self.components)
        return f"{a} + {b}√2 + ({c} + {d}√2)i"

    def __repr__(self) -> str:
        return f"QuadComplexScalar({', '.join(repr(str(v)) for v in self.components)})"

    def __str__(self) -> str:
        parts = []
        for value, tag in zip(self.components, ("", "sqrt2", "i", "sqrt2*i")):
            if not value:
                continue
            mag = abs(value)
            body = tag if (mag == 1 and tag) else (f"{mag}*{tag}" if tag else str(mag))
            parts.append(("- " if value < 0 else "+ ") + body)
        if not parts:
            return "0"
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text


ZERO = QuadComplexScalar()
ONE = QuadComplexScalar(1)
I = QuadComplexScalar(0, 0, 1)
SQRT2 = QuadComplexScalar(0, 1)


def scalar_arith(a: ScalarLike, b: ScalarLike, kind: str) -> QuadComplexScalar:
    """Dispatch one of ``add``, ``sub``, ``mul``, ``div``."""
    x, y = QuadComplexScalar.coerce(a), QuadComplexScalar.coerce(b)
    if kind == "add":
        return x + y
    if kind == "sub":
        return x - y
    if kind == "mul":
        return x * y
    if kind == "div":
        return x / y
    raise ValueError(f"unknown arithmetic kind {kind!r}")
