import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bsvanish import paley_wiener as pw
from bsvanish.errors import NotUpperHalfPlane
from oracles import fhat_convolution, kappa_imaginary_axis


def test_kernel_examples(backend):
    k = pw.PWKernel(1.0)
    assert pw.kernel_eval(k, 1j, -1j) == pytest.approx(1.0, abs=1e-15)
    assert pw.kernel_eval(k, 1j, 1j) == pytest.approx(float(mp.sinh(2 * mp.pi) / (2 * mp.pi)), rel=1e-14)
    for r, d in ((0.5, 0.3), (2.0, 1.7)):
        k = pw.PWKernel(d)
        assert pw.kernel_eval(k, 1j * r, 1j * r) == pytest.approx(math.sinh(2 * math.pi * r * d) / (2 * math.pi * r),
                                                                   rel=1e-13)


def test_kernel_reproduces_on_hermitian_pairs():
    k = pw.PWKernel(0.8)
    rng = np.random.default_rng(2)
    w = rng.normal(size=50) + 1j * rng.normal(size=50)
    z = rng.normal(size=50) + 1j * rng.normal(size=50)
    a = np.array([pw.kernel_eval(k, wi, zi) for wi, zi in zip(w, z)])
    b = np.array([np.conj(pw.kernel_eval(k, zi, wi)) for wi, zi in zip(w, z)])
    assert np.max(np.abs(a - b)) <= 1e-13 * np.max(np.abs(a))


def test_kappa_examples():
    assert pw.kappa_value(1j, 1, 1) == pytest.approx(kappa_imaginary_axis(1, 1, 1), rel=1e-13)
    assert pw.kappa_value(1j, -1, 1) == pytest.approx(kappa_imaginary_axis(1, -1, 1), rel=1e-13)
    assert pw.kappa_value(1j, -1, 1) == pytest.approx(4.8062e-2, abs=5e-7)
    assert pw.kappa_value(1j, 1, 1) == pytest.approx(4.5858e-2, abs=5e-7)
    assert pw.kappa_value(2 + 1j, -1, 1) == pytest.approx(pw.kappa_value(1j, -1, 1), rel=1e-14)


def test_kappa_zero_beta():
    e = pw.build_extremal(1j, 0, 1)
    assert e.kappa == 0.0
    assert np.all(e.F(np.linspace(-3, 3, 11)) == 0)


@pytest.mark.parametrize("alpha", [1.0, -2 + 0j, 1 - 1j])
def test_lower_half_plane_rejected(alpha):
    with pytest.raises(NotUpperHalfPlane):
        pw.build_extremal(alpha, 1, 1)


def test_u_phase_convention():
    e = pw.build_extremal(1j, -1, 1)
    assert e.U(1j) == pytest.approx(-1, abs=1e-12)
    assert e.U(-1j) == pytest.approx(1, abs=1e-12)
    assert e.F(1j) == pytest.approx(-1, abs=1e-12)


@settings(max_examples=60, deadline=None)
@given(st.floats(-3, 3), st.floats(0.1, 3), st.floats(-3, 3), st.floats(-3, 3), st.floats(0.05, 5))
def test_real_and_nonnegative_on_line(x, y, br, bi, d):
    e = pw.build_extremal(complex(x, y), complex(br, bi), d)
    t = np.linspace(x - 40 / d, x + 40 / d, 2001)
    F = e.F(t)
    scale = 1 + float(np.max(np.abs(F)))
    assert np.max(np.abs(F.imag)) <= 1e-12 * scale
    assert np.min(F.real) >= -1e-12 * scale


def test_reality_on_dense_grid():
    e = pw.build_extremal(0.5 + 0.5j, 2 - 1j, 1.0)
    t = np.linspace(-100, 100, 10_000)
    F = e.F(t)
    scale = 1 + float(np.max(np.abs(F)))
    assert np.max(np.abs(F.imag)) <= 1e-12 * scale and np.min(F.real) >= -1e-12 * scale


def test_translation_covariance():
    rng = np.random.default_rng(8)
    z = rng.normal(size=200) * 3 + 1j * rng.normal(size=200)
    for shift in (-2.5, 0.7, 10.0):
        a = pw.build_extremal(0.3 + 1j + shift, 2 - 1j, 0.9)
        b = pw.build_extremal(0.3 + 1j, 2 - 1j, 0.9)
        scale = np.max(np.abs(b.F(z - shift)))
        assert np.max(np.abs(a.F(z) - b.F(z - shift))) <= 1e-10 * scale


def test_transform_properties():
    for alpha, beta, d in ((1 + 2j, 2 - 1j, 1.0), (0.5j, 1j, 0.1), (1j, -1, 10.0)):
        e = pw.build_extremal(alpha, beta, d)
        sf = pw.transform_closed_form(e)
        assert abs(sf(0.0) - e.kappa) <= 1e-12 * e.kappa
        assert sf(d) == 0 and sf(-d) == 0 and sf(2 * d) == 0
        t = np.linspace(-d, d, 401)
        assert np.max(np.abs(sf(-t) - np.conj(sf(t)))) <= 1e-12 * e.kappa
        oracle = fhat_convolution(e.lambda1, e.lambda2, e.alpha, d, t)
        assert np.max(np.abs(sf(t) - oracle)) <= 1e-10 * e.kappa


def test_probe_transform_matches_closed_form():
    e = pw.build_extremal(1j, -1, 1)
    xi = np.array([0.0, 0.3, -0.7])
    got = pw.probe_transform(e, xi)
    assert np.max(np.abs(got - pw.transform_closed_form(e)(xi))) <= 1e-3 * e.kappa


def test_integrate_extremal_within_bound():
    for alpha, beta, d in ((1 + 2j, 2 - 1j, 0.1), (0.5j, -1, 1.0), (1j, 1j, 10.0)):
        e = pw.build_extremal(alpha, beta, d)
        q = pw.integrate_extremal(e)
        assert abs(q.value - e.kappa) <= q.error_bound
        assert q.error_bound <= 1e-4 * e.kappa


def test_sup_bound_and_boas():
    e = pw.build_extremal(0.3 + 1j, 2 - 1j, 0.7)
    t = np.linspace(-300, 300, 600_001)
    U = np.abs(e.U(t))
    assert np.max(U) ** 2 <= e.delta * e.kappa * (1 + 1e-12)
    sup = np.max(U)
    rng = np.random.default_rng(1)
    z = rng.uniform(-5, 5, 100) + 1j * rng.uniform(-2, 2, 100)
    assert np.all(np.abs(e.U(z)) <= sup * np.cosh(np.pi * e.delta * z.imag))


def test_envelope_holds_off_axis():
    rng = np.random.default_rng(0)
    for r in (0.5, 1.0, 2.0):
        for d in (0.5, 1.0, 3.0):
            e = pw.build_extremal(1j * r, -1, d)
            z = rng.uniform(-10, 10, 1000) + 1j * rng.uniform(-5, 5, 1000)
            assert np.all(np.abs(e.U(z)) <= pw.u_envelope(e, z))


@pytest.mark.xfail(strict=True, reason="the one-sided exponent exp(pi d Im(z - ir)) is too small below the axis")
def test_envelope_literal_exponent():
    e = pw.build_extremal(1j, -1, 1.0)
    z = 1.0 + 0j
    assert abs(e.U(z)) <= e.kappa / abs(z + 1j) * math.exp(math.pi * (z.imag - 1.0))


def test_bandlimited_examples():
    d = 1.0
    k = pw.PWKernel(d)
    assert pw.verify_bandlimited(lambda t: pw.kernel_eval(k, 1j, t) ** 2, d, 200 / d) <= 1e-6
    assert pw.verify_bandlimited(pw.build_extremal(1j, -1, 1).F, 1.0, 200.0) <= 1e-6
    assert pw.verify_bandlimited(lambda t: 1 / (1 + t * t), 0.25, 200.0) >= 1e-2


@pytest.mark.xfail(strict=True, reason="a polynomial has point spectrum at 0 and is reproduced by the oversampled kernel")
def test_bandlimited_rejects_identity():
    assert pw.verify_bandlimited(lambda t: t, 0.25, 200.0) >= 1e-2


def test_bandlimited_rejects_wider_spectrum():
    k = pw.PWKernel(2.0)
    assert pw.verify_bandlimited(lambda t: pw.kernel_eval(k, 1j, t) ** 2, 1.0, 200.0) >= 1e-2
