# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled pointwise kernels: csinc, trigamma, Beurling B, Paley-Wiener kernel.

Each function takes a 1-D complex128 array and returns a new array.  Pole
checks happen in the Python callers.
"""
import numpy as np
from libc.math cimport sin, cos, expm1, fabs, isfinite

cdef double PI = 3.141592653589793
cdef double SWITCH_RADIUS = 1e-2
cdef double ASYMPTOTIC_START = 10.0
cdef double[8] SINC_SERIES = [
    -1.0 / 1307674368000.0, 1.0 / 6227020800.0, -1.0 / 39916800.0,
    1.0 / 362880.0, -1.0 / 5040.0, 1.0 / 120.0, -1.0 / 6.0, 1.0,
]
cdef double[8] BERNOULLI = [
    1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730,
    7.0 / 6, -3617.0 / 510,
]


cdef inline void sinh_cosh(double y, double* sh, double* ch) noexcept nogil:
    # one expm1 call; sinh keeps full relative accuracy near y = 0
    cdef double a = fabs(y)
    cdef double m = expm1(a)
    cdef double s = 0.5 * m * (m + 2.0) / (m + 1.0)
    sh[0] = s if y >= 0 else -s
    ch[0] = s + 1.0 / (m + 1.0)


cdef inline double complex csin_(double complex w) noexcept nogil:
    cdef double sh, ch
    sinh_cosh(w.imag, &sh, &ch)
    return sin(w.real) * ch + 1j * (cos(w.real) * sh)


cdef inline double complex csinc_one(double complex w) noexcept nogil:
    cdef double complex w2, acc
    cdef double sh, ch, sr, si, d
    cdef int k
    if w.real * w.real + w.imag * w.imag < SWITCH_RADIUS * SWITCH_RADIUS:
        w2 = w * w
        acc = SINC_SERIES[0]
        for k in range(1, 8):
            acc = acc * w2 + SINC_SERIES[k]
        return acc
    sinh_cosh(w.imag, &sh, &ch)
    sr = sin(w.real) * ch
    si = cos(w.real) * sh
    # (sr + i si) / w with |w| >= SWITCH_RADIUS, no overflow risk in |w|^2
    d = w.real * w.real + w.imag * w.imag
    return (sr * w.real + si * w.imag) / d + 1j * ((si * w.real - sr * w.imag) / d)


cdef inline double complex trigamma_right(double complex z) noexcept nogil:
    cdef double complex acc = 0, inv, inv2, power, series = 0
    cdef int k
    while z.real < ASYMPTOTIC_START:
        acc = acc + 1.0 / (z * z)
        z = z + 1.0
    inv = 1.0 / z
    inv2 = inv * inv
    power = inv * inv2
    for k in range(8):
        series = series + BERNOULLI[k] * power
        power = power * inv2
    return acc + inv + 0.5 * inv2 + series


cdef inline double complex trigamma_one(double complex z) noexcept nogil:
    cdef double complex s, refl
    if z.real >= 0.5:
        return trigamma_right(z)
    s = csin_(PI * z)
    refl = PI * PI / (s * s)
    if not (isfinite(refl.real) and isfinite(refl.imag)):
        refl = 0
    return refl - trigamma_right(1.0 - z)


cdef inline double complex beurling_one(double complex z) noexcept nogil:
    cdef double complex w, s, q
    cdef bint right = z.real >= 0
    w = z if right else -z
    s = csinc_one(PI * w)
    s = s * s
    q = w * w * trigamma_right(1.0 + w)
    if right:
        return 1.0 + 2.0 * s * (w - q)
    return -1.0 + 2.0 * s * (q - w + 1.0)


def csinc(const double complex[::1] w):
    cdef Py_ssize_t i, n = w.shape[0]
    out = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = csinc_one(w[i])
    return out


def trigamma(const double complex[::1] z):
    cdef Py_ssize_t i, n = z.shape[0]
    out = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = trigamma_one(z[i])
    return out


def beurling(const double complex[::1] z):
    cdef Py_ssize_t i, n = z.shape[0]
    out = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = beurling_one(z[i])
    return out


def pw_kernel(double complex omega, double delta, const double complex[::1] z):
    cdef Py_ssize_t i, n = z.shape[0]
    cdef double complex wbar = omega.real - 1j * omega.imag
    out = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = delta * csinc_one(PI * delta * (z[i] - wbar))
    return out
