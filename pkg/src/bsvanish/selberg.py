"""Beurling's function and the Selberg majorant/minorant of an interval.

B(z) = (sin pi z / pi)^2 [sum_{n>=0} (z-n)^-2 - sum_{n>=1} (z+n)^-2 + 2/z]
majorizes sgn(x) with integral excess 1; C and c below bound the indicator of
[a, b] from above and below with L1 error exactly 1/delta.
"""
from dataclasses import dataclass
import math

import numpy as np

from . import _backend
from .errors import DomainError
from .numerics import QuadratureResult, as_complex, integrate_line

__all__ = [
    "beurling_B",
    "SelbergPair",
    "build_selberg",
    "indicator",
    "majorant_excess",
    "minorant_deficit",
    "lipschitz_zero_bound",
    "zero_free_radius",
    "zero_scan",
]


def beurling_B(z):
    """Beurling's entire majorant of sgn, exponential type 2 pi."""
    arr = np.asarray(z, dtype=complex)
    flat = np.ascontiguousarray(arr.ravel())
    out = _backend.impl.beurling(flat).reshape(arr.shape)
    return out[()] if out.ndim == 0 else out


def indicator(a, b, t):
    """Indicator of the closed interval [a, b]."""
    t = np.asarray(t, dtype=float)
    return ((t >= a) & (t <= b)).astype(float)


@dataclass(frozen=True)
class SelbergPair:
    """Selberg majorant C and minorant c of the indicator of [a, b] at type 2 pi delta."""

    a: float
    b: float
    delta: float

    def __post_init__(self):
        for name in ("a", "b", "delta"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if self.a > self.b:
            raise DomainError(f"interval endpoints out of order: {self.a} > {self.b}")
        if not self.delta > 0:
            raise DomainError("delta must be positive")

    @property
    def interval(self):
        return (self.a, self.b)

    @property
    def length(self):
        return self.b - self.a

    @property
    def excess(self):
        """Closed-form value of both integral(C - chi) and integral(chi - c)."""
        return 1.0 / self.delta

    def C(self, z):
        z = np.asarray(z, dtype=complex)
        d = self.delta
        out = 0.5 * (beurling_B(d * (z - self.a)) + beurling_B(d * (self.b - z)))
        return out[()] if np.ndim(out) == 0 else out

    def c(self, z):
        z = np.asarray(z, dtype=complex)
        d = self.delta
        out = -0.5 * (beurling_B(d * (self.a - z)) + beurling_B(d * (z - self.b)))
        return out[()] if np.ndim(out) == 0 else out

    majorant = C
    minorant = c

    def chi(self, t):
        return indicator(self.a, self.b, t)

    def tail_coefficient(self, half_width):
        """T with |C(t) - chi(t)|, |chi(t) - c(t)| <= T / t^2 for |t| >= half_width.

        Uses |B(x) - sgn(x)| <= 2 / (pi x)^2 for real x.
        """
        m = max(abs(self.a), abs(self.b))
        H = float(half_width)
        if not H > m:
            raise ValueError("half_width must exceed max(|a|, |b|)")
        return 2.0 / (math.pi * self.delta) ** 2 * (H / (H - m)) ** 2

    def half_width_for(self, tolerance):
        """Half width whose omitted tails are below tolerance / 2."""
        m = max(abs(self.a), abs(self.b))
        H = 2.0 * m + 8.0 / (math.pi ** 2 * self.delta ** 2 * tolerance)
        return max(H, 2.0 * m + 1.0, 20.0 / self.delta)


def _excess(pair, f, tolerance):
    H = pair.half_width_for(tolerance)
    g = lambda t: np.real(f(t))
    return integrate_line(g, pair.tail_coefficient(H), H, 0.5 * tolerance,
                          breakpoints=(pair.a, pair.b), initial_panels=int(min(8192, 8 * pair.delta * H + 16)))


def majorant_excess(pair: SelbergPair, tolerance=1e-4) -> QuadratureResult:
    """Quadrature of C - chi over R."""
    return _excess(pair, lambda t: pair.C(t) - pair.chi(t), tolerance)


def minorant_deficit(pair: SelbergPair, tolerance=1e-4) -> QuadratureResult:
    """Quadrature of chi - c over R."""
    return _excess(pair, lambda t: pair.chi(t) - pair.c(t), tolerance)


def build_selberg(interval, delta) -> SelbergPair:
    a, b = interval
    return SelbergPair(float(a), float(b), float(delta))


def lipschitz_zero_bound(l1_norm, sigma, omega, c=1.0):
    """c L sigma^2 |omega| cosh(sigma Im omega).

    A function with F(0) >= 1, L1 norm L and type sigma cannot vanish at omega
    while this quantity is below 1 (for the right universal constant c).
    """
    omega = as_complex(omega, "omega")
    return c * l1_norm * sigma ** 2 * abs(omega) * math.cosh(sigma * omega.imag)


def zero_free_radius(pair: SelbergPair, c=1.0):
    """Real-axis radius where lipschitz_zero_bound reaches 1 for C."""
    l1 = pair.length + 1.0 / pair.delta
    sigma = 2.0 * math.pi * pair.delta
    return 1.0 / (c * l1 * sigma ** 2)


def _local_minima(mod):
    inner = mod[1:-1, 1:-1]
    ok = np.ones(inner.shape, dtype=bool)
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            if di == 0 and dj == 0:
                continue
            ok &= inner <= mod[1 + di:mod.shape[0] - 1 + di, 1 + dj:mod.shape[1] - 1 + dj]
    i, j = np.nonzero(ok)
    return i + 1, j + 1


def _refine(f, z0, radius, max_iter=60):
    """Schroeder iteration z <- z - f f' / (f'^2 - f f''); derivatives by contour means."""
    theta = 2.0 * np.pi * np.arange(16) / 16
    unit = np.exp(1j * theta)
    z = complex(z0)
    for _ in range(max_iter):
        r = radius
        vals = f(z + r * unit)
        f0 = complex(np.mean(vals))
        f1 = complex(np.mean(vals / unit)) / r
        f2 = 2.0 * complex(np.mean(vals / unit ** 2)) / r ** 2
        denom = f1 * f1 - f0 * f2
        if denom == 0:
            break
        step = f0 * f1 / denom
        z -= step
        if abs(step) < 1e-13 * (1.0 + abs(z)):
            break
        radius = max(min(radius, 4 * abs(step)), 1e-6 * (1.0 + abs(z)))
    return z


def zero_scan(pair: SelbergPair, search_radius, grid_step, tol=1e-9):
    """Smallest-modulus zero of C in the closed disc of the given radius, or None.

    Local minima of |C| on a square grid are refined by Schroeder iteration and
    accepted when |C| at the refined point is below tol times the scale of C.
    """
    R, h = float(search_radius), float(grid_step)
    if not (R > 0 and h > 0):
        raise DomainError("search_radius and grid_step must be positive")
    k = int(math.ceil(R / h)) + 1
    axis = h * np.arange(-k, k + 1)
    Z = axis[None, :] + 1j * axis[:, None]
    vals = pair.C(Z)
    mod = np.abs(vals)
    inside = np.abs(Z) <= R + h
    scale = max(1.0, float(np.max(mod[inside])))
    ii, jj = _local_minima(np.where(inside, mod, np.inf))
    order = np.argsort(np.abs(Z[ii, jj]))
    best = None
    for idx in order:
        z0 = Z[ii[idx], jj[idx]]
        if best is not None and abs(z0) - 2 * h > abs(best):
            break
        z = _refine(pair.C, z0, 0.25 * h)
        if abs(z - z0) > 2 * h or abs(z) > R:
            continue
        if abs(pair.C(z)) <= tol * scale:
            if best is None or abs(z) < abs(best):
                best = z
    return best
