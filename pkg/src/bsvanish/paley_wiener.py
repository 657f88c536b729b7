"""Paley-Wiener kernel and the extremal nonnegative interpolant.

For delta > 0, Im(alpha) > 0 and complex beta, F(z) = U(z) conj(U(conj z)) is
the nonnegative function on R with Fourier transform in [-delta, delta],
F(alpha) = beta and least integral kappa, where

    U = lambda1 K(alpha, .) + lambda2 K(conj alpha, .),
    K(w, z) = sin(pi delta (z - conj w)) / (pi (z - conj w)).
"""
from dataclasses import dataclass, field
import math

import numpy as np

from . import _backend
from .errors import DomainError, NotUpperHalfPlane
from .numerics import QuadratureResult, as_complex, csinc, integrate_interval, spectrum_probe
from .rkhs_core import TwoPointProblem, solve_two_point

__all__ = [
    "PWKernel",
    "PWExtremal",
    "SpectrumForm",
    "SpectrumTerm",
    "kernel_eval",
    "kernel_gram",
    "build_extremal",
    "eval_U",
    "eval_F",
    "kappa_value",
    "transform_closed_form",
    "u_envelope",
    "probe_transform",
    "integrate_extremal",
    "verify_bandlimited",
]


@dataclass(frozen=True)
class PWKernel:
    """Reproducing kernel of the space with transform support [-delta/2, delta/2]."""

    delta: float

    def __post_init__(self):
        if not (self.delta > 0 and math.isfinite(self.delta)):
            raise DomainError(f"delta must be positive, got {self.delta!r}")

    def __call__(self, omega, z):
        return kernel_eval(self, omega, z)


def kernel_eval(kernel: PWKernel, omega, z):
    """K(omega, z) = delta * csinc(pi delta (z - conj omega)); vectorized in z."""
    omega = as_complex(omega, "omega")
    arr = np.asarray(z, dtype=complex)
    flat = np.ascontiguousarray(arr.ravel())
    out = _backend.impl.pw_kernel(omega, float(kernel.delta), flat).reshape(arr.shape)
    return out[()] if out.ndim == 0 else out


def _sinh_minus_identity(u):
    """sinh(u) - u without cancellation for small u."""
    if abs(u) < 0.5:
        term = u ** 3 / 6.0
        total = term
        k = 3
        while abs(term) > 1e-18 * abs(total):
            term *= u * u / ((k + 1) * (k + 2))
            total += term
            k += 2
        return total
    return math.sinh(u) - u


def kernel_gram(alpha, delta):
    """(K(alpha, alpha), K(alpha, conj alpha), K(alpha, alpha) - delta).

    K(alpha, conj alpha) = delta, and the last entry is computed without
    cancellation.  Overflows once 2 pi delta Im(alpha) exceeds about 710.
    """
    y = alpha.imag
    u = 2.0 * math.pi * y * delta
    denom = 2.0 * math.pi * y
    return math.sinh(u) / denom, float(delta), _sinh_minus_identity(u) / denom


def _check_upper(alpha, name="alpha"):
    alpha = as_complex(alpha, name)
    if not alpha.imag > 0:
        raise NotUpperHalfPlane(f"{name} must have positive imaginary part, got {alpha!r}")
    return alpha


@dataclass(frozen=True)
class SpectrumTerm:
    coeff: complex
    phase_freq: complex
    spread: complex


@dataclass(frozen=True)
class SpectrumForm:
    """Fourier transform supported in [-delta, delta] as a sum of terms

    coeff * exp(-pi i t p) * sin(pi q (delta - |t|)+) / (pi q)

    with the q -> 0 limit coeff * exp(-pi i t p) * (delta - |t|)+.
    """

    delta: float
    terms: tuple

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        r = np.clip(self.delta - np.abs(t), 0.0, None)
        out = np.zeros(t.shape, dtype=complex)
        for term in self.terms:
            window = r * csinc(np.pi * term.spread * r)
            out = out + term.coeff * np.exp(-1j * np.pi * t * term.phase_freq) * window
        out = np.where(np.abs(t) >= self.delta, 0.0, out)
        return out[()] if out.ndim == 0 else out


@dataclass(frozen=True)
class PWExtremal:
    alpha: complex
    beta: complex
    delta: float
    lambda1: complex
    lambda2: complex
    kappa: float
    kernel: PWKernel = field(repr=False, compare=False, default=None)

    def U(self, z):
        return eval_U(self, z)

    def F(self, z):
        return eval_F(self, z)

    def __call__(self, z):
        return eval_F(self, z)

    @property
    def sup_bound(self):
        """sup over R of |F| is at most delta * kappa."""
        return self.delta * self.kappa

    def tail_coefficient(self, half_width):
        """T with |F(t)| <= T / t^2 for real |t| >= half_width (> |Re alpha|)."""
        H = float(half_width)
        x, y = self.alpha.real, self.alpha.imag
        if not H > abs(x):
            raise ValueError("half_width must exceed |Re alpha|")
        c = math.pi * self.delta * y
        l1, l2 = self.lambda1, self.lambda2
        a = math.hypot(abs(l1 + l2) * math.cosh(c), abs(l1 - l2) * math.sinh(c))
        b = (abs(l1) + abs(l2)) * abs(self.alpha) * math.cosh(c)
        return ((a + b / H) / (math.pi * (1.0 - abs(x) / H) ** 2)) ** 2

    def tail_expansion(self, half_width):
        """Integral of F over |t - Re(alpha)| >= H as (leading term, remainder bound).

        With u = t - Re(alpha), U(t) = S(u) / (pi u) + R(u) where S = P sin + Q cos
        of pi delta u and |R| <= Rc / (pi u^2).  The mean of |S|^2 gives the
        leading term (|P|^2 + |Q|^2) / (pi^2 H); the oscillating part, the cross
        term and |R|^2 are bounded by integration by parts and are O(H^-2).
        """
        H = float(half_width)
        y = self.alpha.imag
        c = math.pi * self.delta * y
        l1, l2 = self.lambda1, self.lambda2
        p2 = (abs(l1 + l2) * math.cosh(c)) ** 2
        q2 = (abs(l1 - l2) * math.sinh(c)) ** 2
        amp = math.sqrt(p2 + q2)
        rc = y * (abs(l1) + abs(l2)) * math.cosh(c)
        pi2 = math.pi ** 2
        main = (p2 + q2) / (pi2 * H)
        rem = (abs(q2 - p2) / (math.pi ** 3 * self.delta * H ** 2)
               + 2.0 * amp * rc / (pi2 * H ** 2)
               + 2.0 * rc ** 2 / (3.0 * pi2 * H ** 3))
        return main, rem


def integrate_extremal(extremal: PWExtremal, rel_tol=1e-5):
    """Quadrature of F over R with an analytic tail.

    The core [x - H, x + H], x = Re(alpha), is integrated adaptively with panels
    no wider than one period 1/delta; the tail contributes its leading term to
    the value and its remainder bound to error_bound.
    """
    if extremal.kappa == 0:
        return QuadratureResult(0.0, 0.0)
    target = rel_tol * extremal.kappa
    H = 4.0 / extremal.delta
    while extremal.tail_expansion(H)[1] > 0.25 * target:
        H *= 1.25
    main, rem = extremal.tail_expansion(H)
    x = extremal.alpha.real
    f = lambda t: np.real(eval_F(extremal, t))
    core = integrate_interval(f, x - H, x + H, 0.5 * target, max_width=1.0 / extremal.delta)
    return QuadratureResult(core.value + main, core.error_bound + rem)




def build_extremal(alpha, beta, delta) -> PWExtremal:
    """Extremal nonnegative interpolant with F(alpha) = beta and type 2 pi delta."""
    alpha = _check_upper(alpha)
    beta = as_complex(beta, "beta")
    kernel = PWKernel(float(delta))
    eta, nu, gap = kernel_gram(alpha, kernel.delta)
    sol = solve_two_point(TwoPointProblem(eta, nu, beta, gap))
    return PWExtremal(alpha, beta, kernel.delta, sol.lambda1, sol.lambda2, sol.min_norm_sq, kernel)


def kappa_value(alpha, beta, delta) -> float:
    """Least integral of a nonnegative admissible function with F(alpha) = beta."""
    return build_extremal(alpha, beta, delta).kappa


def eval_U(extremal: PWExtremal, z):
    k = extremal.kernel or PWKernel(extremal.delta)
    if extremal.lambda1 == 0 and extremal.lambda2 == 0:
        out = np.zeros(np.shape(z), dtype=complex)
        return out[()] if out.ndim == 0 else out
    return (extremal.lambda1 * kernel_eval(k, extremal.alpha, z)
            + extremal.lambda2 * kernel_eval(k, extremal.alpha.conjugate(), z))


def eval_F(extremal: PWExtremal, z):
    """F(z) = U(z) conj(U(conj z)); real and nonnegative on R."""
    z = np.asarray(z, dtype=complex)
    out = eval_U(extremal, z) * np.conj(eval_U(extremal, np.conj(z)))
    out = np.asarray(out)
    return out[()] if out.ndim == 0 else out


def transform_closed_form(extremal: PWExtremal) -> SpectrumForm:
    """Closed-form Fourier transform of F, supported in [-delta, delta]."""
    a = extremal.alpha
    x, y = a.real, a.imag
    l1, l2 = extremal.lambda1, extremal.lambda2
    terms = []
    if l1 != 0 or l2 != 0:
        # diagonal: (|l1|^2 + |l2|^2) e^{-2 pi i x t} sinh(2 pi y (delta-|t|))/(2 pi y)
        terms.append(SpectrumTerm(abs(l1) ** 2 + abs(l2) ** 2, 2 * x + 0j, 2j * y))
        # cross terms: e^{-2 pi i alpha t}, e^{-2 pi i conj(alpha) t}, pure window
        terms.append(SpectrumTerm(l2 * l1.conjugate(), 2 * a, 0j))
        terms.append(SpectrumTerm(l1 * l2.conjugate(), 2 * a.conjugate(), 0j))
    return SpectrumForm(extremal.delta, tuple(terms))


def probe_transform(extremal: PWExtremal, xi, half_width=None):
    """Trapezoidal transform of sampled F at the frequencies xi.

    Samples at spacing 1/(4 delta), so the rule is alias-free for |xi| <= delta,
    on [x - half_width, x + half_width] around x = Re(alpha).  By default the
    half width grows from 1000/delta until the leading term of the truncated
    tail is below 2.5e-4 kappa, with at most 4e6 samples.
    """
    d = extremal.delta
    if half_width is None:
        H = 1000.0 / d
        while (extremal.kappa > 0 and extremal.tail_expansion(H)[0] > 2.5e-4 * extremal.kappa
               and H * d < 5e5):
            H *= 2.0
    else:
        H = float(half_width)
    h = 1.0 / (4.0 * d)
    n = int(math.ceil(H / h))
    start = extremal.alpha.real - n * h
    t = start + h * np.arange(2 * n + 1)
    samples = np.real(eval_F(extremal, t))
    xi = np.atleast_1d(np.asarray(xi, dtype=float))
    return np.array([spectrum_probe(samples, h, x, start) for x in xi])


def u_envelope(extremal: PWExtremal, z):
    """Envelope for |U(z)| when beta = -1.

    kappa exp(pi delta (|Im z| + y)) / |z - alpha| for Im z >= 0 and the same with
    conj(alpha) below the axis, y = Im(alpha).
    """
    z = np.asarray(z, dtype=complex)
    a = extremal.alpha
    y = a.imag
    center = np.where(z.imag >= 0, a, a.conjugate())
    return extremal.kappa * np.exp(np.pi * extremal.delta * (np.abs(z.imag) + y)) / np.abs(z - center)


# the window sinc(u/m)^k has transform support of total width k/(m h); with
# spacing h = 1/((2 + eps) sigma) and k/m = eps/(2 + eps) the reconstruction
# transform is 1 on [-sigma, sigma] and 0 beyond (1 + eps) sigma
CUTOFF_EXCESS = 0.5
WINDOW_ORDER = 6


def _reconstruction_kernel(u, eps=CUTOFF_EXCESS, k=WINDOW_ORDER):
    m = k * (2.0 + eps) / eps
    return np.sinc(u) * np.sinc(u / m) ** k


def verify_bandlimited(f, sigma, window, n_test=2000):
    """Relative sampling-reconstruction residual of f against spectral radius sigma.

    Samples f on R at spacing h = 1/(2.5 sigma) over [-window/2, window/2] and
    rebuilds it with a kernel whose transform is 1 on [-sigma, sigma] and 0
    beyond 1.5 sigma.  Functions with transform supported in [-sigma, sigma]
    are reproduced up to truncation; content beyond sigma is removed or
    aliased into the band.  Returns max |f - reconstruction| / max |f| over
    the central half of the window.
    """
    sigma = float(sigma)
    window = float(window)
    if not (sigma > 0 and window > 0):
        raise DomainError("sigma and window must be positive")
    h = 1.0 / ((2.0 + CUTOFF_EXCESS) * sigma)
    n = int(math.floor(0.5 * window / h))
    idx = np.arange(-n, n + 1)
    nodes = h * idx
    samples = np.asarray(f(nodes.astype(complex)), dtype=complex)
    quarter = 0.25 * window
    x = np.linspace(-quarter, quarter, n_test) + 0.37 * h
    exact = np.asarray(f(x.astype(complex)), dtype=complex)
    recon = np.empty_like(exact)
    for start in range(0, x.size, 256):
        xs = x[start:start + 256]
        recon[start:start + 256] = _reconstruction_kernel(xs[:, None] / h - idx[None, :]) @ samples
    scale = max(np.max(np.abs(exact)), np.max(np.abs(samples)))
    if scale == 0:
        return 0.0
    return float(np.max(np.abs(exact - recon)) / scale)
