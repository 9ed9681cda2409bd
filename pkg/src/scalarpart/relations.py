"""(m+1)-term linear relations among scalar partition functions.

For generators ``d`` and positive multipliers ``delta`` the relation reads

    W(s, d) = sum_i W(s*delta_i, d_i),   d_{i,i} = d_i,
                                         d_{i,j} = delta_i*d_j - delta_j*d_i,

valid at every nonnegative integer ``s``.  Terms with negative generators
are rewritten over positive ones with a sign and an argument shift.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod
from typing import Sequence

import numpy as np

from .algebra import RationalPolynomial
from .bernoulli_bell import higher_bernoulli_number, norlund_numbers, poly_part
from .denumerant import (
    GeneratorVector,
    SignedTerm,
    denumerant,
    eval_signed_term,
    normalize_signed,
)
from .quasipoly import build_quasipoly, wave_decompose, wave_eval_real

__all__ = [
    "DeltaVector",
    "Relation",
    "InvalidDelta",
    "VerificationReport",
    "validate_delta",
    "generate_relation",
    "lift_solution",
    "verify_relation_integer",
    "verify_poly_relation",
    "verify_bernoulli_relations",
    "numeric_identities",
    "check_bell_conjecture",
    "DegenerateInput",
    "relation_continuous_profile",
    "random_admissible",
    "random_conjecture_draw",
]


class DeltaVector(tuple):
    def __new__(cls, entries):
        entries = tuple(int(x) for x in entries)
        if not entries:
            raise ValueError("empty multiplier vector")
        if any(x < 1 for x in entries):
            raise ValueError(f"multipliers must be positive integers, got {entries}")
        return super().__new__(cls, entries)


class InvalidDelta(ValueError):
    """Multiplier vector violating the coprime-column or noncollinearity rule."""

    def __init__(self, violations: list[str]):
        self.violations = violations
        super().__init__("; ".join(violations))


class DegenerateInput(ValueError):
    pass


def validate_delta(d: Sequence[int], delta: Sequence[int]) -> list[str]:
    """Return the rule violations of ``delta`` for ``d``; empty means ok.

    Columns are ``(-delta_i, d_i)``; each must have coprime entries and no
    two may be collinear.  Indices in messages are 1-based.
    """
    d = GeneratorVector(d)
    delta = DeltaVector(delta)
    if len(d) != len(delta):
        raise ValueError(f"length mismatch: d has {len(d)} entries, delta has {len(delta)}")
    out = []
    for i, (g, e) in enumerate(zip(d, delta), 1):
        if gcd(g, e) != 1:
            out.append(f"column {i} not coprime: gcd(delta_{i}={e}, d_{i}={g}) = {gcd(g, e)}")
    m = len(d)
    for i in range(m):
        for j in range(i + 1, m):
            if delta[i] * d[j] == delta[j] * d[i]:
                out.append(f"columns {i + 1},{j + 1} collinear")
    return out


@dataclass(frozen=True)
class Relation:
    """``matrix[i][j]`` is ``d_{i,j}``; term ``i`` carries the same entries
    reordered as ``(d_{i,i}, d_{i,1}, ..., d_{i,m})`` without repeating the diagonal."""

    base: GeneratorVector
    delta: DeltaVector
    terms: tuple[SignedTerm, ...]
    matrix: tuple[tuple[int, ...], ...]
    sigma_offset: int = 0

    @property
    def m(self) -> int:
        return self.base.m

    @property
    def raw_vectors(self) -> list[tuple[int, ...]]:
        return [t.raw_generators for t in self.terms]


def generate_relation(d: Sequence[int], delta: Sequence[int]) -> Relation:
    d = GeneratorVector(d)
    delta = DeltaVector(delta)
    bad = validate_delta(d, delta)
    if bad:
        raise InvalidDelta(bad)
    m = len(d)
    matrix = tuple(
        tuple(d[i] if j == i else delta[i] * d[j] - delta[j] * d[i] for j in range(m))
        for i in range(m)
    )
    # term vectors list the diagonal entry first, the rest in index order
    terms = tuple(
        normalize_signed((row[i],) + row[:i] + row[i + 1:], delta[i])
        for i, row in enumerate(matrix)
    )
    return Relation(d, delta, terms, matrix)


def lift_solution(x: Sequence[int], d: Sequence[int], delta: Sequence[int], sigma: int = 0) -> tuple[int, ...]:
    """Extend a solution of ``s = d.x`` to the two-row system by appending
    ``x_{m+1} = sigma + delta.x``."""
    if any(v < 0 for v in x):
        raise ValueError("solution entries must be nonnegative")
    if sigma < 0:
        raise ValueError("sigma must be nonnegative")
    if not (len(x) == len(d) == len(delta)):
        raise ValueError("x, d and delta must have equal length")
    extra = sigma + sum(e * v for e, v in zip(delta, x))
    lifted = tuple(x) + (extra,)
    s = sum(g * v for g, v in zip(d, x))
    # both rows of the extended system
    assert sigma == lifted[-1] - sum(e * v for e, v in zip(delta, x))
    assert s == sum(g * v for g, v in zip(d, lifted))
    return lifted


@dataclass
class VerificationReport:
    checked_range: tuple[int, int] | None = None
    violations: list[tuple[int, object]] = field(default_factory=list)
    identity_values: dict[str, Fraction] = field(default_factory=dict)
    expected: dict[str, Fraction] = field(default_factory=dict)

    @property
    def status(self) -> str:
        ok = not self.violations and all(
            self.identity_values[k] == v for k, v in self.expected.items()
        )
        return "pass" if ok else "fail"

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def relation_residual(r: Relation, s: int) -> int:
    """``W(s, d) - sum_i W(s*delta_i, d_i)`` at integer ``s >= 0``."""
    return denumerant(s, r.base) - sum(eval_signed_term(s, t) for t in r.terms)


def verify_relation_integer(r: Relation, s_min: int, s_max: int) -> VerificationReport:
    if not 0 <= s_min <= s_max:
        raise ValueError("need 0 <= s_min <= s_max")
    rep = VerificationReport(checked_range=(s_min, s_max))
    for s in range(s_min, s_max + 1):
        w = relation_residual(r, s)
        if w:
            rep.violations.append((s, w))
    return rep


def term_poly_part(t: SignedTerm) -> RationalPolynomial:
    """Polynomial part of ``W(s*delta_i, d_i)`` via its positive form."""
    return poly_part(t.abs_generators).compose_linear(t.s_multiplier, t.shift) * t.sign


def verify_poly_relation(r: Relation) -> tuple[bool, RationalPolynomial, list[RationalPolynomial]]:
    """Return ``(passed, residual, term_parts)`` for the polynomial parts."""
    parts = [term_poly_part(t) for t in r.terms]
    residual = poly_part(r.base)
    for p in parts:
        residual = residual - p
    return residual.is_zero(), residual, parts


def verify_bernoulli_relations(r: Relation) -> list[Fraction]:
    """For ``k = 0..m-1``: ``B_{m-k-1}(d)/pi(d) - sum_i delta_i**k B_{m-k-1}(d_i)/pi(d_i)``,
    using the signed vectors ``d_i`` directly."""
    m = r.m
    base = norlund_numbers(m - 1, r.base)
    pi_base = prod(r.base)
    terms = [(t.s_multiplier, norlund_numbers(m - 1, t.raw_generators), prod(t.raw_generators))
             for t in r.terms]
    out = []
    for k in range(m):
        n = m - k - 1
        v = Fraction(base[n], pi_base)
        for e, nums, p in terms:
            v -= Fraction(e**k) * nums[n] / p
        out.append(v)
    return out


def _sigma(v, r=1):
    return sum(x**r for x in v)


def numeric_identities(r: Relation) -> dict[str, object]:
    """Numerical identities following from the relation; each ``*_ratio`` /
    ``*_term`` value is expected to equal 1.  Per-term summands are
    returned alongside.  ``third_term`` is ``None`` when ``m < 3``."""
    d = r.base
    m = r.m
    raws = r.raw_vectors
    deltas = [t.s_multiplier for t in r.terms]
    pi_d = prod(d)
    s1 = _sigma(d)
    s2 = _sigma(d, 2)
    sigma1_terms = [_sigma(v) for v in raws]
    lead = [Fraction(pi_d * e ** (m - 1), prod(v)) for e, v in zip(deltas, raws)]
    second = [Fraction(e ** (m - 2) * _sigma(v), prod(v)) if m >= 2 else Fraction(0)
              for e, v in zip(deltas, raws)]
    out: dict[str, object] = {
        "sigma1_terms": sigma1_terms,
        "sigma2_terms": [_sigma(v, 2) for v in raws],
        "sigma_sum_ratio": Fraction(sum(sigma1_terms), s1),
        "lead_summands": lead,
        "lead_term": sum(lead, Fraction(0)),
        "second_prefactor": Fraction(pi_d, s1),
        "second_summands": second,
        "second_term": Fraction(pi_d, s1) * sum(second, Fraction(0)) if m >= 2 else None,
    }
    if m >= 3:
        third = [Fraction(e ** (m - 3) * (3 * _sigma(v) ** 2 - _sigma(v, 2)), prod(v))
                 for e, v in zip(deltas, raws)]
        pref = Fraction(pi_d, 3 * s1**2 - s2)
        out.update(third_prefactor=pref, third_summands=third,
                   third_term=pref * sum(third, Fraction(0)))
    else:
        out.update(third_prefactor=None, third_summands=None, third_term=None)
    return out


def check_bell_conjecture(x: Sequence, y: Sequence, k: int) -> Fraction:
    """``B_{m-k-1}(x)/pi(x) - sum_i y_i**k B_{m-k-1}(s_i)/pi(s_i)`` with
    ``s_{i,j} = y_i x_j - y_j x_i`` off the diagonal and ``s_{i,i} = x_i``."""
    x = [Fraction(v) for v in x]
    y = [Fraction(v) for v in y]
    m = len(x)
    if len(y) != m:
        raise ValueError("x and y must have equal length")
    if not 0 <= k < m:
        raise ValueError("need 0 <= k < m")
    if prod(x) == 0:
        raise DegenerateInput("pi(x) = 0")
    n = m - k - 1
    val = higher_bernoulli_number(n, x) / prod(x)
    for i in range(m):
        si = [x[i] if j == i else y[i] * x[j] - y[j] * x[i] for j in range(m)]
        p = prod(si)
        if p == 0:
            raise DegenerateInput(f"pi(s_{i + 1}) = 0")
        val -= y[i] ** k * higher_bernoulli_number(n, si) / p
    return val


def relation_continuous_profile(r: Relation, s_lo: float, s_hi: float, step: float):
    """Sample the continuous extension of the relation residual.

    Returns ``(s, w)`` arrays.  Grid points within 1e-9 of an integer are
    snapped to it.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    n = int(np.floor((s_hi - s_lo) / step + 1e-9)) + 1
    s = s_lo + step * np.arange(n)
    near = np.round(s)
    s = np.where(np.abs(s - near) < 1e-9, near, s)
    w = wave_eval_real(wave_decompose(build_quasipoly(r.base)), s)
    for t in r.terms:
        wd = wave_decompose(build_quasipoly(t.abs_generators), t.s_multiplier)
        w = w - t.sign * wave_eval_real(wd, s, shift=t.shift)
    return s, w


def random_admissible(rng: random.Random, m_max: int = 5, d_max: int = 10, delta_max: int = 4,
                      m_min: int = 1) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Draw ``(d, delta)`` uniformly until ``validate_delta`` accepts it."""
    while True:
        m = rng.randint(m_min, m_max)
        d = tuple(rng.randint(1, d_max) for _ in range(m))
        delta = tuple(rng.randint(1, delta_max) for _ in range(m))
        if not validate_delta(d, delta):
            return d, delta


def random_conjecture_draw(rng: random.Random, m: int, bound: int = 9) -> tuple[list[Fraction], list[Fraction]]:
    """Random rational ``(x, y)`` with every product in the conjecture nonzero."""
    def q(nonzero):
        while True:
            v = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
            if v or not nonzero:
                return v

    while True:
        x = [q(True) for _ in range(m)]
        y = [q(False) for _ in range(m)]
        if all(y[i] * x[j] != y[j] * x[i] for i in range(m) for j in range(i + 1, m)):
            return x, y
