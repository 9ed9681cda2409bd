"""Higher-order Bernoulli polynomials, complete Bell polynomials, and the
polynomial part of a scalar partition function.

The higher-order Bernoulli polynomials are the EGF coefficients of
``exp(s*t) * prod(d_i*t / (exp(d_i*t) - 1))``.  Generators may be any
nonzero rationals here; negative ones occur in relation terms.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial, prod
from typing import Sequence

from .algebra import RationalPolynomial, TruncatedSeries, series_divide, series_multiply

__all__ = [
    "bernoulli_numbers",
    "norlund_numbers",
    "higher_bernoulli_poly",
    "higher_bernoulli_number",
    "complete_bell",
    "bell_args_from_generators",
    "poly_part",
]


_bernoulli: list[Fraction] = []
_bernoulli_lock = threading.Lock()


def bernoulli_numbers(n_max: int) -> list[Fraction]:
    """B_0..B_{n_max} from ``t/(exp(t)-1)``, so ``B_1 = -1/2``."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    with _bernoulli_lock:
        if len(_bernoulli) <= n_max:
            order = max(n_max + 1, 2 * len(_bernoulli), 32)
            one = TruncatedSeries([1], order)
            _bernoulli[:] = series_divide(one, TruncatedSeries.expm1_over_t(1, order)).coeffs
        return _bernoulli[: n_max + 1]


def _check_generators(d: Sequence) -> tuple[Fraction, ...]:
    d = tuple(Fraction(x) for x in d)
    if not d:
        raise ValueError("empty generator vector")
    if any(x == 0 for x in d):
        raise ValueError(f"zero generator in {d}")
    return d


def norlund_numbers(n_max: int, d: Sequence) -> list[Fraction]:
    """Higher-order Bernoulli numbers B^{(m)}_0..B^{(m)}_{n_max} for ``d``.

    Each generator contributes the series of ``d*t/(exp(d*t)-1)``, whose
    n-th EGF coefficient is ``B_n * d**n``.
    """
    d = _check_generators(d)
    order = n_max + 1
    bern = bernoulli_numbers(n_max)
    acc = TruncatedSeries([1], order)
    for g in d:
        acc = series_multiply(acc, TruncatedSeries(b * g**n for n, b in enumerate(bern)))
    return list(acc.coeffs)


def higher_bernoulli_number(n: int, d: Sequence) -> Fraction:
    if n < 0:
        raise ValueError("n must be >= 0")
    return norlund_numbers(n, d)[n]


def higher_bernoulli_poly(n: int, d: Sequence) -> RationalPolynomial:
    """B^{(m)}_n(s, d) as a polynomial in ``s`` of degree ``n``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    nums = norlund_numbers(n, d)
    return RationalPolynomial(comb(n, k) * nums[n - k] for k in range(n + 1))


def complete_bell(n: int, a: Sequence) -> Fraction:
    """Complete Bell polynomial evaluated at ``a = (a_1, a_2, ...)``.

    Uses ``B_{n+1} = sum_k C(n, k) B_{n-k} a_{k+1}``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if len(a) < n:
        raise ValueError(f"complete_bell({n}) needs {n} arguments, got {len(a)}")
    a = [Fraction(x) for x in a]
    bell = [Fraction(1)]
    for j in range(n):
        bell.append(sum(comb(j, k) * bell[j - k] * a[k] for k in range(j + 1)))
    return bell[n]


def bell_args_from_generators(d: Sequence, n_max: int) -> list[Fraction]:
    """``a_r = (-1)**(r-1) * B_r * sigma_r(d) / r`` for r = 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    d = _check_generators(d)
    bern = bernoulli_numbers(n_max)
    return [
        (-1) ** (r - 1) * bern[r] * sum(g**r for g in d) / r
        for r in range(1, n_max + 1)
    ]


def poly_part(d: Sequence) -> RationalPolynomial:
    """Polynomial (first Sylvester wave) part of ``W(s, d)``.

    ``B^{(m)}_{m-1}(s + sigma_1(d), d) / ((m-1)! * prod(d))``.  With signed
    generators this is the polynomial part of the formal term ``W(s, d)``
    before rewriting it over positive generators.
    """
    d = _check_generators(d)
    m = len(d)
    b = higher_bernoulli_poly(m - 1, d)
    return b.compose_linear(1, sum(d)) / (factorial(m - 1) * prod(d))
