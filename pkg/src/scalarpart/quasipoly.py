"""Quasipolynomial form of ``W(s, d)``, Sylvester waves, and the continuous
extension built from Cayley's prime radical circulators.

Integer statements are decided on the exact :class:`Quasipolynomial`; the
floating point :class:`WaveDecomposition` only serves the continuous
extension.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np

from .algebra import RationalPolynomial, gcd_lcm_vec, interpolate
from .denumerant import GeneratorVector, denumerant_table

__all__ = [
    "Quasipolynomial",
    "WaveDecomposition",
    "ParityReport",
    "build_quasipoly",
    "qp_eval_integer",
    "circulator_psi",
    "wave_decompose",
    "wave_eval_real",
    "check_parity",
]

TOL = 1e-9


@dataclass(frozen=True)
class Quasipolynomial:
    generators: GeneratorVector
    period: int
    residue_polys: tuple[RationalPolynomial, ...]

    @property
    def degree_bound(self) -> int:
        return self.generators.m - 1

    def __call__(self, s: int) -> Fraction:
        return qp_eval_integer(self, s)

    def principal_part(self) -> RationalPolynomial:
        """Exact j=1 wave: the mean of the residue polynomials."""
        total = RationalPolynomial()
        for p in self.residue_polys:
            total = total + p
        return total / self.period


def build_quasipoly(d: Sequence[int]) -> Quasipolynomial:
    """Interpolate one polynomial per residue class mod ``lcm(d)``."""
    d = GeneratorVector(d)
    m = d.m
    _, period = gcd_lcm_vec(d)
    table = denumerant_table(d, period * (m + 1))
    polys = []
    for r in range(period):
        xs = [r + k * period for k in range(m)]
        polys.append(interpolate(xs, [table[x] for x in xs]))
    return Quasipolynomial(d, period, tuple(polys))


def qp_eval_integer(q: Quasipolynomial, s: int) -> Fraction:
    return q.residue_polys[s % q.period](s)


def circulator_psi(j: int, s: float) -> float:
    """Real form of the prime radical circulator: the sum of
    ``cos(2*pi*n*s/j)`` over ``1 <= n <= j`` coprime to ``j``.

    ``j = 1`` gives the constant 1.  At integer ``s`` this is the Ramanujan
    sum ``c_j(s)``.
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    if j == 1:
        return 1.0
    ns = np.array([n for n in range(1, j) if gcd(n, j) == 1], dtype=float)
    z = np.exp(2j * np.pi * ns * s / j).sum()
    if float(s).is_integer():
        assert abs(z.imag) < 1e-12 * max(1, len(ns))
    return float(z.real)


@dataclass(frozen=True)
class WaveDecomposition:
    """Fourier form of a quasipolynomial grouped into Sylvester waves.

    ``amplitudes[k, n]`` is the DFT (over one period) of the ``s**k``
    coefficient sequence of the residue polynomials; frequency ``n``
    belongs to wave ``j = period // gcd(n, period)``.  The continuous value
    at ``x`` is ``sum_k x**k * Re(sum_n amplitudes[k, n] * exp(2*pi*i*n*x/period))``,
    evaluated at ``x = s*s_multiplier + shift``.
    """

    generators: GeneratorVector
    period: int
    amplitudes: np.ndarray
    s_multiplier: int = 1
    waves: dict[int, np.ndarray] = field(default_factory=dict, compare=False)

    @property
    def wave_indices(self) -> list[int]:
        return sorted(self.waves)

    def wave_polynomial(self, j: int = 1) -> np.ndarray:
        """Float coefficients of the j=1 wave (only defined for j=1)."""
        if j != 1:
            raise ValueError("only the principal wave is a plain polynomial")
        return self.amplitudes[:, 0].real.copy()

    def circulator_coefficients(self, j: int) -> np.ndarray:
        """Real ``C[k, r]``, ``0 <= r < j``, with wave ``j`` equal to
        ``sum_k s**k sum_r C[k, r] * Psi_j(s - r)``."""
        return np.array(
            [[self.wave_value_integer(j, r, k) / j for r in range(j)]
             for k in range(self.amplitudes.shape[0])]
        )

    def wave_value_integer(self, j: int, r: int, k: int) -> float:
        """Periodic factor of ``s**k`` in wave ``j`` at integer ``r``."""
        idx = self.waves.get(j)
        if idx is None:
            return 0.0
        ph = np.exp(2j * np.pi * idx * r / self.period)
        return float((self.amplitudes[k, idx] * ph).sum().real)

    def wave_eval(self, j: int, x) -> np.ndarray:
        """Value of wave ``j`` alone at raw argument ``x`` (no multiplier)."""
        x = np.asarray(x, dtype=float)
        idx = self.waves.get(j)
        if idx is None:
            return np.zeros_like(x)
        return _fourier_eval(self.amplitudes[:, idx], idx, self.period, x)

    def with_multiplier(self, delta: int) -> WaveDecomposition:
        return WaveDecomposition(self.generators, self.period, self.amplitudes, delta, self.waves)


def _fourier_eval(amps: np.ndarray, freqs: np.ndarray, period: int, x: np.ndarray) -> np.ndarray:
    flat = np.atleast_1d(x).ravel()
    # reduce n*x mod period before scaling to keep phases accurate
    phase = np.mod(np.outer(flat, freqs), period) * (2 * np.pi / period)
    basis = np.exp(1j * phase)
    out = np.zeros(flat.shape)
    power = np.ones(flat.shape)
    for k in range(amps.shape[0]):
        out += power * (basis @ amps[k]).real
        power = power * flat
    return out.reshape(np.shape(x))


def wave_decompose(q: Quasipolynomial, delta: int = 1) -> WaveDecomposition:
    if delta < 1:
        raise ValueError("delta must be >= 1")
    m = q.generators.m
    L = q.period
    coeffs = np.array(
        [[float(p.coeff(k)) for p in q.residue_polys] for k in range(m)]
    ).reshape(m, L)
    amps = np.fft.fft(coeffs, axis=1) / L
    n = np.arange(L)
    order = L // np.gcd(n, L)
    waves = {int(j): n[order == j] for j in np.unique(order)}
    return WaveDecomposition(q.generators, L, amps, delta, waves)


def wave_eval_real(wd: WaveDecomposition, s, shift: float = 0.0):
    """Continuous extension evaluated at ``s * s_multiplier + shift``."""
    x = np.asarray(s, dtype=float) * wd.s_multiplier + shift
    out = _fourier_eval(wd.amplitudes, np.arange(wd.period), wd.period, x)
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class ParityReport:
    generators: GeneratorVector
    s_max: int
    parity_violations: tuple[int, ...]
    zero_violations: tuple[int, ...]
    zero_range: tuple[int, int]

    @property
    def ok(self) -> bool:
        return not self.parity_violations and not self.zero_violations


def check_parity(q: Quasipolynomial, s_max: int) -> ParityReport:
    """Check ``W(s) = (-1)**(m+1) W(-s - sigma_1)`` for ``1 <= s <= s_max``
    and vanishing on ``-sigma_1 < s < 0``, exactly."""
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    d = q.generators
    sign = (-1) ** (d.m + 1)
    s1 = d.sigma(1)
    parity_bad = tuple(
        s for s in range(1, s_max + 1)
        if qp_eval_integer(q, s) != sign * qp_eval_integer(q, -s - s1)
    )
    zero_bad = tuple(s for s in range(-s1 + 1, 0) if qp_eval_integer(q, s) != 0)
    return ParityReport(d, s_max, parity_bad, zero_bad, (-s1 + 1, -1))
