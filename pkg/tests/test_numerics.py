import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bsvanish import build_selberg
from bsvanish.errors import BracketError, DomainError, PoleError, QuadratureError
from bsvanish.numerics import (
    SWITCH_RADIUS,
    QuadratureResult,
    as_complex,
    csinc,
    find_root,
    integrate_interval,
    integrate_line,
    loglog_slope,
    spectrum_probe,
    trigamma,
)
from oracles import trigamma_partial_sums

finite = st.floats(-50, 50, allow_nan=False, allow_infinity=False)


def test_csinc_examples(backend):
    assert csinc(0) == 1
    assert abs(csinc(math.pi)) <= 1e-15
    assert abs(csinc(1j) - math.sinh(1.0)) <= 1e-15 * math.sinh(1.0)


def test_csinc_switch_region_high_precision(backend):
    rng = np.random.default_rng(3)
    r = SWITCH_RADIUS * np.sqrt(rng.uniform(0, 1.2, 200))
    w = r * np.exp(2j * np.pi * rng.uniform(0, 1, 200))
    got = csinc(w)
    for wi, gi in zip(w, got):
        ref = complex(mp.sin(mp.mpc(wi)) / mp.mpc(wi)) if wi != 0 else 1
        assert abs(gi - ref) <= 1e-14 * abs(ref)


@settings(max_examples=200, deadline=None)
@given(finite, finite)
def test_csinc_even(x, y):
    w = complex(x, y)
    assert abs(csinc(w) - csinc(-w)) <= 1e-15 * max(1.0, abs(csinc(w)))


def test_trigamma_examples(backend):
    assert abs(trigamma(1) - math.pi ** 2 / 6) <= 1e-14
    assert abs(trigamma(2) - (math.pi ** 2 / 6 - 1)) <= 1e-14
    assert abs(trigamma(0.5) - math.pi ** 2 / 2) <= 1e-13
    assert abs(trigamma(0.5) - trigamma_partial_sums(0.5)) <= 1e-12


def test_trigamma_against_mpmath(backend):
    rng = np.random.default_rng(5)
    z = rng.uniform(-30, 30, 150) + 1j * rng.uniform(-30, 30, 150)
    got = trigamma(z)
    for zi, gi in zip(z, got):
        ref = complex(mp.polygamma(1, mp.mpc(zi)))
        assert abs(gi - ref) <= 1e-12 * abs(ref)


@settings(max_examples=200, deadline=None)
@given(st.floats(0.01, 500), st.floats(-500, 500))
def test_trigamma_recurrence(x, y):
    z = complex(x, y)
    lhs = trigamma(z) - trigamma(z + 1)
    assert abs(lhs - 1 / z ** 2) <= 1e-12 * max(abs(trigamma(z)), abs(1 / z ** 2))


@pytest.mark.parametrize("z", [0, -1, -7, -2.0])
def test_trigamma_poles(z):
    with pytest.raises(PoleError):
        trigamma(z)


def test_as_complex_rejects_nonfinite():
    with pytest.raises(DomainError):
        as_complex(float("nan"))
    with pytest.raises(DomainError):
        as_complex("abc")
    assert as_complex(2) == 2 + 0j


def test_quadrature_result_nonnegative():
    with pytest.raises(ValueError):
        QuadratureResult(1.0, -1e-3)


def test_integrate_line_lorentzian():
    res = integrate_line(lambda t: 1 / (1 + t * t), 1.0, 1e4, 1e-8)
    assert abs(res.value - math.pi) <= res.error_bound
    assert res.error_bound <= 2.1e-4


def test_integrate_line_fejer():
    res = integrate_line(lambda t: np.sinc(t) ** 2, 1 / math.pi ** 2, 1e3, 1e-8)
    assert abs(res.value - 1.0) <= res.error_bound


def test_integrate_line_selberg_excess():
    pair = build_selberg((-1, 1), 1.0)
    H = 2000.0
    res = integrate_line(lambda t: np.real(pair.C(t)) - pair.chi(t), pair.tail_coefficient(H), H, 1e-5,
                         breakpoints=(-1, 1))
    assert abs(res.value - 1.0) <= res.error_bound


@settings(max_examples=25, deadline=None)
@given(st.floats(0.2, 5.0), st.floats(0.0, 3.0))
def test_even_integrand_twice_half(a, shift):
    f = lambda t: 1 / (a * a + t * t) * np.cos(shift * t) ** 2
    H = 200.0
    full = integrate_line(f, 1.0, H, 1e-9)
    half = integrate_interval(f, 0, H, 1e-9)
    assert abs(full.value - 2 * half.value) <= full.error_bound + 2 * half.error_bound + 1e-12


def test_integrate_interval_budget():
    with pytest.raises(QuadratureError):
        integrate_interval(lambda t: np.sin(1e6 * t), 0, 10, 1e-14, max_panels=1000)


def test_find_root_examples():
    assert abs(find_root(lambda u: u - 1, 0, 2) - 1) <= 1e-12
    assert abs(find_root(math.cos, 1, 2) - math.pi / 2) <= 1e-12
    with pytest.raises(BracketError):
        find_root(lambda u: u * u + 1, -1, 1)


def test_find_root_threshold_equation_has_no_bracket():
    # 4 sinh u - sinh 2u - 2u is negative on (0, inf): [0.5, 2] carries no sign change
    g = lambda u: 4 * math.sinh(u) - math.sinh(2 * u) - 2 * u
    with pytest.raises(BracketError):
        find_root(g, 0.5, 2.0)


def test_spectrum_probe_triangle():
    h = 1e-3
    t = np.arange(-2000, 2001) * h
    tri = np.clip(1 - np.abs(t), 0, None)
    assert abs(spectrum_probe(tri, h, 0.0) - 1) <= 1e-6
    assert abs(spectrum_probe(tri, h, 1.0)) <= 1e-6


def test_loglog_slope_exact_power():
    x = np.geomspace(0.1, 10, 7)
    assert abs(loglog_slope(x, 3 * x ** -2.5) + 2.5) <= 1e-12
