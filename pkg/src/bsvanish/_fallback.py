"""Numpy implementations of the pointwise kernels.

Mirrors the compiled module ``_kernels`` function for function.  Inputs are
1-D complex128 arrays; pole checks happen in the callers.
"""
import numpy as np

SWITCH_RADIUS = 1e-2
# sin(w)/w = sum_k (-1)^k w^(2k) / (2k+1)!, k = 0..7, highest order first
_SINC_SERIES = np.array([
    -1.0 / 1307674368000.0,
    1.0 / 6227020800.0,
    -1.0 / 39916800.0,
    1.0 / 362880.0,
    -1.0 / 5040.0,
    1.0 / 120.0,
    -1.0 / 6.0,
    1.0,
])
# B_2, B_4, ..., B_16
_BERNOULLI = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6, -3617 / 510)
_ASYMPTOTIC_START = 10.0


def csinc(w):
    w = np.asarray(w, dtype=complex)
    out = np.empty_like(w)
    small = np.abs(w) < SWITCH_RADIUS
    ws = w[small]
    out[small] = np.polyval(_SINC_SERIES, ws * ws)
    wl = w[~small]
    with np.errstate(over="ignore", invalid="ignore"):
        out[~small] = np.sin(wl) / wl
    return out


def _trigamma_right(z):
    """Trigamma for Re z >= 0.5 by upward recurrence and the asymptotic series."""
    acc = np.zeros_like(z)
    steps = np.maximum(0.0, np.ceil(_ASYMPTOTIC_START - z.real)).astype(int)
    zz = z.copy()
    for k in range(int(steps.max(initial=0))):
        m = steps > k
        acc[m] += 1.0 / (zz[m] * zz[m])
        zz[m] += 1.0
    inv = 1.0 / zz
    inv2 = inv * inv
    power = inv * inv2
    series = np.zeros_like(zz)
    for b in _BERNOULLI:
        series += b * power
        power = power * inv2
    return acc + inv + 0.5 * inv2 + series


def trigamma(z):
    z = np.asarray(z, dtype=complex)
    left = z.real < 0.5
    zr = np.where(left, 1.0 - z, z)
    base = _trigamma_right(zr)
    out = base.copy()
    if left.any():
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            s = np.sin(np.pi * z[left])
            refl = np.pi ** 2 / (s * s)
        refl = np.where(np.isfinite(refl), refl, 0.0)
        out[left] = refl - base[left]
    return out


def beurling(z):
    z = np.asarray(z, dtype=complex)
    right = z.real >= 0
    w = np.where(right, z, -z)
    s = csinc(np.pi * w)
    s = s * s
    q = w * w * _trigamma_right(1.0 + w)
    return np.where(right, 1.0 + 2.0 * s * (w - q), -1.0 + 2.0 * s * (q - w + 1.0))


def pw_kernel(omega, delta, z):
    z = np.asarray(z, dtype=complex)
    return delta * csinc(np.pi * delta * (z - np.conj(omega)))
