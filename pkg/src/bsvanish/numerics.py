"""Shared numeric plumbing.

Entire-function helpers (csinc, trigamma), adaptive Gauss-Kronrod quadrature
over the real line with an explicit analytic tail bound, bisection and a
trapezoidal Fourier probe.
"""
from dataclasses import dataclass
import math

import numpy as np

from . import _backend
from ._fallback import SWITCH_RADIUS
from .errors import BracketError, DomainError, PoleError, QuadratureError

__all__ = [
    "SWITCH_RADIUS",
    "QuadratureResult",
    "as_complex",
    "csinc",
    "trigamma",
    "integrate_interval",
    "integrate_line",
    "find_root",
    "spectrum_probe",
    "loglog_slope",
]


def as_complex(x, name="value"):
    """Coerce to a finite Python complex."""
    try:
        z = complex(x)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{name} is not a complex number: {x!r}") from exc
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"{name} must be finite, got {z!r}")
    return z


def _apply(kernel, z):
    arr = np.asarray(z, dtype=complex)
    flat = np.ascontiguousarray(arr.ravel())
    out = kernel(flat).reshape(arr.shape)
    return out[()] if out.ndim == 0 else out


def csinc(w):
    """sin(w)/w with value 1 at w = 0; accepts scalars or arrays."""
    return _apply(_backend.impl.csinc, w)


def trigamma(z):
    """Complex trigamma psi'(z); raises PoleError at z = 0, -1, -2, ..."""
    arr = np.asarray(z, dtype=complex)
    at_pole = (arr.imag == 0) & (arr.real <= 0) & (arr.real == np.round(arr.real))
    if np.any(at_pole):
        raise PoleError("trigamma has poles at the non-positive integers")
    return _apply(_backend.impl.trigamma, arr)


@dataclass(frozen=True)
class QuadratureResult:
    value: complex | float
    error_bound: float

    def __post_init__(self):
        if not self.error_bound >= 0:
            raise ValueError("error_bound must be nonnegative")


# 15-point Kronrod nodes on [0, 1] (positive half) and weights; every second
# node from index 1 carries the 7-point Gauss rule.
_XK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
_NODES = np.concatenate([-_XK[:-1], _XK[::-1]])
_KW = np.concatenate([_WK[:-1], _WK[::-1]])
_GW = np.zeros(15)
_GW[[1, 3, 5, 13, 11, 9]] = np.concatenate([_WG[:-1], _WG[:-1]])
_GW[7] = _WG[-1]


def integrate_interval(f, lo, hi, tolerance, *, breakpoints=(), initial_panels=1,
                       max_width=None, max_panels=2_000_000):
    """Adaptive G7/K15 bisection of a vectorized integrand over [lo, hi].

    A panel is accepted once |K15 - G7| is below ``tolerance * width / (hi - lo)``.
    Breakpoints become panel boundaries.  ``max_width`` caps the initial panel
    width; set it to the oscillation period of the integrand so the two rules
    cannot agree by aliasing.  Returns a QuadratureResult whose error_bound is
    the sum of accepted panel estimates.
    """
    lo, hi = float(lo), float(hi)
    if not hi > lo:
        raise ValueError("need lo < hi")
    if not tolerance > 0:
        raise ValueError("tolerance must be positive")
    cuts = sorted({lo, hi, *(float(b) for b in breakpoints if lo < b < hi)})
    edges = []
    for a, b in zip(cuts[:-1], cuts[1:]):
        count = max(1, int(initial_panels * (b - a) / (hi - lo)))
        if max_width is not None:
            count = max(count, int(math.ceil((b - a) / max_width)))
        edges.append(np.linspace(a, b, count + 1))
    left = np.concatenate([e[:-1] for e in edges])
    right = np.concatenate([e[1:] for e in edges])
    density = tolerance / (hi - lo)
    total = 0.0
    err = 0.0
    used = 0
    while left.size:
        used += left.size
        if used > max_panels:
            raise QuadratureError(f"panel budget {max_panels} exhausted on [{lo}, {hi}]")
        half = 0.5 * (right - left)
        mid = 0.5 * (right + left)
        x = mid[:, None] + half[:, None] * _NODES[None, :]
        y = np.asarray(f(x.ravel())).reshape(x.shape)
        kron = (y @ _KW) * half
        gauss = (y @ _GW) * half
        est = np.abs(kron - gauss)
        if not np.all(np.isfinite(kron)):
            raise QuadratureError("integrand returned non-finite values")
        ok = est <= density * 2.0 * half
        total = total + kron[ok].sum()
        err += float(est[ok].sum())
        bad = ~ok
        left, right = (np.concatenate([left[bad], mid[bad]]),
                       np.concatenate([mid[bad], right[bad]]))
    if isinstance(total, complex) and total.imag == 0.0:
        total = total.real
    return QuadratureResult(total, err)


def integrate_line(f, tail_coefficient, half_width, tolerance, *, breakpoints=(),
                   initial_panels=None, max_width=None, max_panels=2_000_000):
    """Integrate f over the real line.

    The caller guarantees |f(t)| <= tail_coefficient / t**2 for |t| >= half_width;
    the omitted tails then contribute at most 2 * tail_coefficient / half_width,
    which is added to the adaptive estimate in ``error_bound``.
    """
    H = float(half_width)
    if not H > 0:
        raise ValueError("half_width must be positive")
    if not tail_coefficient >= 0:
        raise ValueError("tail_coefficient must be nonnegative")
    if initial_panels is None:
        initial_panels = int(min(4096, max(16, H)))
    res = integrate_interval(f, -H, H, tolerance, breakpoints=breakpoints,
                             initial_panels=initial_panels, max_width=max_width,
                             max_panels=max_panels)
    return QuadratureResult(res.value, res.error_bound + 2.0 * tail_coefficient / H)


def find_root(g, lo, hi, tol=1e-12):
    """Bisection root of a real function with a sign change on [lo, hi]."""
    lo, hi = float(lo), float(hi)
    glo, ghi = g(lo), g(hi)
    if glo == 0:
        return lo
    if ghi == 0:
        return hi
    if np.sign(glo) == np.sign(ghi):
        raise BracketError(f"g({lo}) = {glo:.3e} and g({hi}) = {ghi:.3e} have the same sign")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if gm == 0:
            return mid
        if np.sign(gm) == np.sign(glo):
            lo, glo = mid, gm
        else:
            hi = mid
        if mid in (lo, hi) and hi - lo <= 4 * np.spacing(mid):
            break
    return 0.5 * (lo + hi)


def spectrum_probe(samples, spacing, frequency, start=None):
    """Trapezoidal approximation of the Fourier transform at one frequency.

    ``samples[k]`` is f(start + k*spacing); by default the samples are centred
    on t = 0.  Returns sum_k w_k f(t_k) exp(-2 pi i t_k xi) * spacing.
    """
    s = np.asarray(samples, dtype=complex)
    n = s.size
    if start is None:
        start = -0.5 * (n - 1) * spacing
    t = start + spacing * np.arange(n)
    w = np.ones(n)
    w[0] = w[-1] = 0.5
    return complex(spacing * np.sum(w * s * np.exp(-2j * np.pi * t * frequency)))


def loglog_slope(x, y):
    """Least-squares slope of log y against log x."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return float(np.polyfit(np.log(x), np.log(y), 1)[0])
