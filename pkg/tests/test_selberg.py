import math

import numpy as np
import pytest

from bsvanish import selberg
from bsvanish.errors import DomainError
from bsvanish.paley_wiener import verify_bandlimited
from oracles import beurling_series


def test_beurling_matches_series(backend):
    rng = np.random.default_rng(4)
    z = rng.uniform(-6, 6, 40) + 1j * rng.uniform(-2, 2, 40)
    z = np.concatenate([z, [0.5, -0.5, 2.25, -3.75, 1e-4, -1e-4, 3 + 1e-4]])
    got = selberg.beurling_B(z)
    for zi, gi in zip(z, got):
        ref = beurling_series(zi)
        assert abs(gi - ref) <= 1e-12 * max(1.0, abs(ref))


def test_beurling_integer_values(backend):
    n = np.arange(1, 12)
    assert np.max(np.abs(selberg.beurling_B(-n.astype(float)) + 1)) <= 1e-10
    assert np.max(np.abs(selberg.beurling_B(n.astype(float)) - 1)) <= 1e-10
    assert selberg.beurling_B(0.0) == pytest.approx(1.0, abs=1e-14)


def test_beurling_majorizes_sign():
    t = np.linspace(-50, 50, 100_001)
    assert np.min(np.real(selberg.beurling_B(t)) - np.sign(t)) >= -1e-12


def test_beurling_excess_is_one():
    from bsvanish.numerics import integrate_line

    H = 4000.0
    f = lambda t: np.real(selberg.beurling_B(t)) - np.sign(t)
    res = integrate_line(f, 2 / math.pi ** 2 * 1.01, H, 1e-6, breakpoints=(0.0,))
    assert abs(res.value - 1.0) <= res.error_bound


@pytest.mark.parametrize("delta", [0.5, 1.0, 2.0, 5.0])
def test_integral_identities(delta):
    pair = selberg.build_selberg((-1, 1), delta)
    for res in (selberg.majorant_excess(pair), selberg.minorant_deficit(pair)):
        assert abs(res.value - 1 / delta) <= res.error_bound
    assert pair.excess == 1 / delta


@pytest.mark.parametrize("interval,delta", [((-1, 1), 2.0), ((0, 3), 0.7), ((-0.2, 0.1), 4.0)])
def test_ordering_on_grid(interval, delta):
    pair = selberg.build_selberg(interval, delta)
    a, b = interval
    t = np.concatenate([np.linspace(a - 20 / delta, b + 20 / delta, 10_000), [a, b]])
    chi = pair.chi(t)
    assert np.all(np.real(pair.c(t)) <= chi + 1e-10)
    assert np.all(chi <= np.real(pair.C(t)) + 1e-10)


def test_bandlimited_and_bernstein_boas():
    for d in (0.5, 1.0, 2.0):
        pair = selberg.build_selberg((-1, 1), d)
        assert verify_bandlimited(pair.C, d, 200 / d) <= 1e-5
        t = np.linspace(-30, 30, 600_001)
        h = t[1] - t[0]
        C = np.real(pair.C(t))
        dC = (C[2:] - C[:-2]) / (2 * h)
        assert np.max(np.abs(dC)) <= 2 * math.pi * d * np.max(np.abs(C)) * (1 + 1e-3)
        rng = np.random.default_rng(6)
        z = rng.uniform(-5, 5, 100) + 1j * rng.uniform(-1, 1, 100)
        assert np.all(np.abs(pair.C(z)) <= np.max(np.abs(C)) * np.cosh(2 * math.pi * d * z.imag) * (1 + 1e-6))


def test_invalid_pairs():
    with pytest.raises(DomainError):
        selberg.build_selberg((1, -1), 1)
    with pytest.raises(DomainError):
        selberg.build_selberg((-1, 1), 0)


def test_lipschitz_zero_bound():
    assert selberg.lipschitz_zero_bound(3.0, 2.0, 0) == 0
    assert selberg.lipschitz_zero_bound(3.0, 2.0, 0.5) == pytest.approx(3.0 * 4.0 * 0.5)
    radii = [selberg.zero_free_radius(selberg.build_selberg((-1, 1), d)) for d in (1e-3, 2e-3, 4e-3)]
    # L ~ 1/delta and sigma^2 ~ delta^2 make the radius scale like 1/delta
    assert radii[0] / radii[1] == pytest.approx(2.0, rel=1e-2)
    assert radii[1] / radii[2] == pytest.approx(2.0, rel=1e-2)


def test_zero_scan_examples():
    pair = selberg.build_selberg((-1, 1), 1.0)
    assert selberg.zero_scan(pair, 0.1, 0.005) is None
    z = selberg.zero_scan(pair, 1.5, 0.02)
    assert z is not None and abs(pair.C(z)) <= 1e-9 * 10
    assert not (abs(z.imag) < 1e-9 and -1 <= z.real <= 1)


def test_zero_scan_rejects_bad_grid():
    with pytest.raises(DomainError):
        selberg.zero_scan(selberg.build_selberg((-1, 1), 1.0), 0, 0.1)
