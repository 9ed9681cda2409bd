import math
import random

import numpy as np
import pytest

from scalarpart.algebra import RationalPolynomial as P
from scalarpart.bernoulli_bell import poly_part
from scalarpart.denumerant import brute_force_count, denumerant
from scalarpart.quasipoly import (
    build_quasipoly,
    check_parity,
    circulator_psi,
    qp_eval_integer,
    wave_decompose,
    wave_eval_real,
)


def test_single_even_generator():
    q = build_quasipoly([2])
    assert q.period == 2
    assert q.residue_polys == (P([1]), P([0]))


def test_two_unit_generators():
    q = build_quasipoly([1, 1])
    assert q.period == 1 and q.residue_polys == (P([1, 1]),)
    assert qp_eval_integer(q, -1) == 0
    assert qp_eval_integer(q, -3) == -2 == (-1) ** 3 * denumerant(1, [1, 1])


def test_reference_generators():
    q = build_quasipoly([2, 3, 6, 7])
    assert q.period == 42
    assert all(p.degree <= 3 for p in q.residue_polys)
    assert qp_eval_integer(q, 10) == brute_force_count(10, [2, 3, 6, 7])
    assert qp_eval_integer(q, -5) == 0


@pytest.mark.parametrize("d", [[2, 3, 6, 7], [2, 2, 5, 7], [1], [3, 4], [4, 6, 9], [5, 1, 5, 2, 3]])
def test_exactness_bridge(d):
    q = build_quasipoly(d)
    for s in range(3 * q.period + 1):
        assert qp_eval_integer(q, s) == denumerant(s, d)


@pytest.mark.parametrize("d", [[2, 3, 6, 7], [2, 2, 5, 7], [1], [3, 4], [4, 6, 9]])
def test_principal_part_is_polynomial_part(d):
    # DP route (mean over residues) against the Bernoulli route, exactly
    assert build_quasipoly(d).principal_part() == poly_part(d)


def test_circulator_values():
    for s in range(-4, 5):
        assert circulator_psi(2, s) == pytest.approx((-1) ** s, abs=1e-12)
    assert circulator_psi(4, 0) == pytest.approx(2)
    assert circulator_psi(4, 1) == pytest.approx(0, abs=1e-12)
    assert circulator_psi(1, 0.37) == 1.0


def ramanujan_sum(j, s):
    # c_j(s) = sum over d | gcd(j, s) of mu(j/d) * d
    def mu(n):
        out, p = 1, 2
        while p * p <= n:
            if n % p == 0:
                n //= p
                if n % p == 0:
                    return 0
                out = -out
            p += 1
        return -out if n > 1 else out

    g = math.gcd(j, s)
    return sum(mu(j // k) * k for k in range(1, g + 1) if g % k == 0)


@pytest.mark.parametrize("j", [1, 2, 3, 4, 6, 9, 10, 12])
def test_circulator_is_ramanujan_sum_at_integers(j):
    for s in range(0, 25):
        assert circulator_psi(j, s) == pytest.approx(ramanujan_sum(j, s), abs=1e-9)


def test_wave_single_even_generator():
    wd = wave_decompose(build_quasipoly([2]))
    assert wd.wave_indices == [1, 2]
    for s in np.linspace(-3, 3, 25):
        assert wave_eval_real(wd, s) == pytest.approx((1 + math.cos(math.pi * s)) / 2, abs=1e-12)
    assert wave_eval_real(wd, 0.5) == pytest.approx(0.5)


def test_wave_unit_generators():
    wd = wave_decompose(build_quasipoly([1, 1]))
    assert wd.wave_indices == [1]
    assert wave_eval_real(wd, 3.7) == pytest.approx(4.7, abs=1e-12)


def test_wave_reference_principal_part():
    wd = wave_decompose(build_quasipoly([2, 3, 6, 7]))
    exact = [1 * 113 / 336, 437 / 3024, 1 / 56, 1 / 1512]
    assert np.allclose(wd.wave_polynomial(), exact, atol=1e-9, rtol=0)
    assert wave_eval_real(wd, 17) == pytest.approx(denumerant(17, [2, 3, 6, 7]), abs=1e-9)


@pytest.mark.parametrize("d", [[2, 3, 6, 7], [2, 2, 5, 7], [4, 6, 9], [3, 5, 1, 5]])
def test_wave_sum_matches_integers(d):
    q = build_quasipoly(d)
    wd = wave_decompose(q)
    s = np.arange(-40, 120)
    vals = wave_eval_real(wd, s)
    for x, v in zip(s, vals):
        exact = float(qp_eval_integer(q, int(x)))
        assert abs(v - exact) < 1e-9 * max(1, abs(exact))


def test_waves_sum_to_total():
    wd = wave_decompose(build_quasipoly([2, 3, 6, 7]))
    x = np.linspace(-5, 20, 101)
    total = sum(wd.wave_eval(j, x) for j in wd.wave_indices)
    assert np.allclose(total, wave_eval_real(wd, x), atol=1e-10)


def test_circulator_form_matches_fourier_form():
    wd = wave_decompose(build_quasipoly([2, 3, 6, 7]))
    for j in wd.wave_indices:
        c = wd.circulator_coefficients(j)
        for x in (0.3, 2.0, 7.75, 11.1):
            val = sum(x**k * sum(c[k, r] * circulator_psi(j, x - r) for r in range(j))
                      for k in range(c.shape[0]))
            assert val == pytest.approx(float(wd.wave_eval(j, x)), abs=1e-10)


def test_multiplier_scales_argument():
    q = build_quasipoly([2, 3])
    wd1 = wave_decompose(q)
    wd3 = wave_decompose(q, 3)
    x = np.linspace(0, 5, 11)
    assert np.allclose(wave_eval_real(wd3, x), wave_eval_real(wd1, 3 * x))


def test_parity_reference_case():
    rep = check_parity(build_quasipoly([2, 3, 6, 7]), 100)
    assert rep.ok and rep.zero_range == (-17, -1)


def test_parity_trivial_and_duplicates():
    assert check_parity(build_quasipoly([1]), 10).ok
    q = build_quasipoly([2, 2, 5, 7])
    rep = check_parity(q, 100)
    assert rep.ok and rep.zero_range == (-15, -1)
    assert all(qp_eval_integer(q, s) == 0 for s in range(-15, 0))
    assert qp_eval_integer(q, -16) != 0


def test_parity_reports_violations():
    # a tampered quasipolynomial must be caught
    q = build_quasipoly([1, 2])
    bad = type(q)(q.generators, q.period, (q.residue_polys[0] + 1,) + q.residue_polys[1:])
    rep = check_parity(bad, 10)
    assert not rep.ok


def _drop(d, i):
    return d[:i] + d[i + 1:]


def test_wave_one_recursion_exact():
    rng = random.Random(11)
    for _ in range(20):
        d = [rng.randint(1, 9) for _ in range(rng.randint(2, 5))]
        w = poly_part(d)
        for i, g in enumerate(d):
            assert w - w.compose_linear(1, -g) == poly_part(_drop(d, i))


def test_wave_j_recursion_numeric():
    rng = random.Random(12)
    for _ in range(6):
        d = [rng.randint(1, 8) for _ in range(rng.randint(2, 4))]
        full = wave_decompose(build_quasipoly(d))
        s = np.array(rng.sample(range(-30, 80), 50), dtype=float)
        for i, g in enumerate(d):
            rest = wave_decompose(build_quasipoly(_drop(d, i)))
            for j in full.wave_indices:
                if j == 1:
                    continue
                lhs = full.wave_eval(j, s) - full.wave_eval(j, s - g)
                assert np.allclose(lhs, rest.wave_eval(j, s), atol=1e-8, rtol=0)


def test_nonprincipal_wave_degree():
    # the s**k factor of wave j vanishes once k reaches the number of generators divisible by j
    d = [2, 3, 6, 7]
    wd = wave_decompose(build_quasipoly(d))
    for j in wd.wave_indices:
        mult = sum(1 for g in d if g % j == 0)
        for k in range(mult, len(d)):
            idx = wd.waves[j]
            assert np.abs(wd.amplitudes[k, idx]).max() < 1e-9
