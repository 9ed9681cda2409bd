"""Exact rational substrate: dense polynomials and truncated EGF series.

Rationals are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import comb, gcd, lcm
from typing import Iterable, Sequence

__all__ = [
    "Fraction",
    "RationalPolynomial",
    "TruncatedSeries",
    "poly_add_scale",
    "poly_eval",
    "interpolate",
    "series_multiply",
    "series_divide",
    "gcd_lcm_vec",
]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class RationalPolynomial:
    """Univariate polynomial with exact rational coefficients.

    ``coeffs[k]`` is the coefficient of ``s**k``. Trailing zeros are
    stripped on construction, so the zero polynomial has ``degree == -1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def constant(cls, c) -> RationalPolynomial:
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> RationalPolynomial:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, x) -> Fraction:
        return poly_eval(self, x)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RationalPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> RationalPolynomial:
        return poly_add_scale(self, _as_poly(other), Fraction(1))

    __radd__ = __add__

    def __sub__(self, other) -> RationalPolynomial:
        return poly_add_scale(self, _as_poly(other), Fraction(-1))

    def __rsub__(self, other) -> RationalPolynomial:
        return poly_add_scale(_as_poly(other), self, Fraction(-1))

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(-c for c in self.coeffs)

    def __mul__(self, other) -> RationalPolynomial:
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial(c * other for c in self.coeffs)
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, c) -> RationalPolynomial:
        c = _frac(c)
        return RationalPolynomial(x / c for x in self.coeffs)

    def compose_linear(self, a, b) -> RationalPolynomial:
        """Return the polynomial ``s -> self(a*s + b)``."""
        lin = RationalPolynomial([b, a])
        out = RationalPolynomial()
        # Horner in polynomial arithmetic
        for c in reversed(self.coeffs):
            out = out * lin + RationalPolynomial([c])
        return out

    def __repr__(self) -> str:
        if self.is_zero():
            return "RationalPolynomial(0)"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("s" if k == 1 else f"s^{k}")
            terms.append(f"({c})" + (f"*{mono}" if mono else ""))
        return "RationalPolynomial(" + " + ".join(terms) + ")"


def _as_poly(p) -> RationalPolynomial:
    if isinstance(p, RationalPolynomial):
        return p
    return RationalPolynomial([p])


def poly_add_scale(p: RationalPolynomial, q: RationalPolynomial, c) -> RationalPolynomial:
    """Return ``p + c*q``."""
    c = _frac(c)
    n = max(len(p.coeffs), len(q.coeffs))
    return RationalPolynomial(p.coeff(k) + c * q.coeff(k) for k in range(n))


def poly_eval(p: RationalPolynomial, x) -> Fraction:
    x = _frac(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def interpolate(xs: Sequence, ys: Sequence) -> RationalPolynomial:
    """Unique polynomial of degree < len(xs) through the points, by Newton
    divided differences."""
    if len(xs) != len(ys):
        raise ValueError("xs and ys differ in length")
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    xs = [_frac(x) for x in xs]
    table = [_frac(y) for y in ys]
    n = len(xs)
    newton = [table[0]]
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(n - level)
        ]
        newton.append(table[0])
    out = RationalPolynomial([newton[-1]])
    for k in range(n - 2, -1, -1):
        out = out * RationalPolynomial([-xs[k], 1]) + RationalPolynomial([newton[k]])
    return out


class TruncatedSeries:
    """Power series truncated at ``order`` terms, stored in the exponential
    convention: ``coeffs[n]`` multiplies ``t**n / n!``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        c = [_frac(x) for x in coeffs]
        if order is not None:
            c = (c + [Fraction(0)] * order)[:order]
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def exp_linear(cls, a, order: int) -> TruncatedSeries:
        """Series of ``exp(a*t)``."""
        a = _frac(a)
        return cls([a**n for n in range(order)])

    @classmethod
    def expm1_over_t(cls, d, order: int) -> TruncatedSeries:
        """Series of ``(exp(d*t) - 1) / t``; constant term ``d``."""
        d = _frac(d)
        return cls([d ** (n + 1) / (n + 1) for n in range(order)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_multiply(self, other)

    def __truediv__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_divide(self, other)

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"


def _common_order(a: TruncatedSeries, b: TruncatedSeries) -> int:
    return min(a.order, b.order)


def series_multiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = _common_order(a, b)
    return TruncatedSeries(
        sum(comb(k, i) * a.coeffs[i] * b.coeffs[k - i] for i in range(k + 1))
        for k in range(n)
    )


def series_divide(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """Exact quotient ``num / den``; ``den`` needs a nonzero constant term."""
    n = _common_order(num, den)
    if n and den.coeffs[0] == 0:
        raise ZeroDivisionError("series division by a series with zero constant term")
    out: list[Fraction] = []
    b0 = den.coeffs[0] if n else Fraction(1)
    for k in range(n):
        acc = num.coeffs[k]
        for i in range(k):
            acc -= comb(k, i) * out[i] * den.coeffs[k - i]
        out.append(acc / b0)
    return TruncatedSeries(out)


def gcd_lcm_vec(v: Sequence[int]) -> tuple[int, int]:
    if not v:
        raise ValueError("empty vector")
    if any(x < 1 for x in v):
        raise ValueError("entries must be positive integers")
    return reduce(gcd, v), reduce(lcm, v)
