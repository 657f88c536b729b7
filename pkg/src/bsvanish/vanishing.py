"""Majorants and minorants of an interval indicator that vanish at given points.

Constructions on top of a SelbergPair (C, c) and extremal interpolants F:

- additive majorant      G(z) = C(z) + F(z; alpha, -C(alpha))             type 2 pi delta
- multiplicative         C(z) (1 + F(z; alpha, -1))                       type 4 pi delta
- multipoint             C(z) prod_n (1 + F(w_n z; w_n alpha_n, -1))     type 4 pi delta
- additive minorant      c(z) - F(z; alpha, c(alpha))
- multiplicative minor.  c(z) (1 - F(z; alpha, 1))
"""
from dataclasses import dataclass, field
from itertools import combinations
import math

import numpy as np

from .errors import DomainError, ModeArity, NotUpperHalfPlane, ThresholdViolated
from .numerics import as_complex, find_root, integrate_line, loglog_slope
from .paley_wiener import PWExtremal, build_extremal
from .selberg import SelbergPair, build_selberg

__all__ = [
    "MAJORANT_MODES",
    "MINORANT_MODES",
    "VanishingMajorant",
    "VanishingMinorant",
    "RhoEstimate",
    "RhoScan",
    "build_majorant",
    "build_minorant",
    "threshold_function",
    "threshold_root",
    "minorant_threshold_ok",
    "rho_upper_value",
    "rho_scan",
    "factor_sup_bound",
    "factor_sup_bound_simplified",
    "multipoint_integral_bound",
]

MAJORANT_MODES = ("additive", "multiplicative", "multipoint")
MINORANT_MODES = ("additive", "multiplicative")


def _upper(points):
    out = []
    for p in points:
        p = as_complex(p, "point")
        if not p.imag > 0:
            raise NotUpperHalfPlane(f"point {p!r} is not in the upper half-plane")
        out.append(p)
    return tuple(out)


def _product_minus_one(factors):
    """prod(1 + f_n) - 1 without the cancellation of forming the product first."""
    acc = 0
    for f in factors:
        acc = acc + f + acc * f
    return acc


@dataclass(frozen=True)
class VanishingMajorant:
    base: SelbergPair
    points: tuple
    mode: str
    spectral_radius: float
    weights: tuple = ()
    extremals: tuple = field(default=(), repr=False)

    def _factors(self, z):
        return [ext.F(w * z) for ext, w in zip(self.extremals, self.weights)]

    def excess_over_base(self, z):
        """Majorant minus C."""
        z = np.asarray(z, dtype=complex)
        if self.mode == "additive":
            return self.extremals[0].F(z)
        return self.base.C(z) * _product_minus_one(self._factors(z))

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = self.base.C(z) + self.excess_over_base(z)
        return out[()] if np.ndim(out) == 0 else out

    def tail_coefficient(self, half_width):
        """T with |majorant - C| <= T / t^2 on |t| >= half_width."""
        H = float(half_width)
        if self.mode == "additive":
            return self.extremals[0].tail_coefficient(H)
        tc = self.base.tail_coefficient(H)
        growth = 1.0
        for ext, w in zip(self.extremals, self.weights):
            tf = ext.tail_coefficient(w * H) / w ** 2
            growth *= 1.0 + min(ext.sup_bound, tf / H ** 2)
        # |C| <= tc / t^2 off the interval and |prod - 1| <= growth - 1
        return tc * (growth - 1.0)


@dataclass(frozen=True)
class VanishingMinorant:
    base: SelbergPair
    point: complex
    mode: str
    spectral_radius: float
    extremal: PWExtremal = field(default=None, repr=False)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        if self.mode == "additive":
            out = self.base.c(z) - self.extremal.F(z)
        else:
            out = self.base.c(z) * (1.0 - self.extremal.F(z))
        return out[()] if np.ndim(out) == 0 else out


def build_majorant(base: SelbergPair, points, mode, weights=None) -> VanishingMajorant:
    """Majorant of the base interval vanishing at the given upper half-plane points."""
    if mode not in MAJORANT_MODES:
        raise DomainError(f"unknown majorant mode {mode!r}")
    if isinstance(points, (complex, float, int)):
        points = (points,)
    pts = _upper(points)
    if not pts:
        raise ModeArity("at least one point is required")
    d = base.delta
    if mode in ("additive", "multiplicative") and len(pts) != 1:
        raise ModeArity(f"{mode} mode takes exactly one point, got {len(pts)}")
    if mode == "additive":
        a = pts[0]
        ext = build_extremal(a, -complex(base.C(a)), d)
        return VanishingMajorant(base, pts, mode, d, (1.0,), (ext,))
    if mode == "multiplicative":
        ext = build_extremal(pts[0], -1.0, d)
        return VanishingMajorant(base, pts, mode, 2.0 * d, (1.0,), (ext,))
    n = len(pts)
    if weights is None:
        w = (1.0 / n,) * n
    else:
        w = tuple(float(x) for x in weights)
        if len(w) != n or min(w) <= 0 or abs(sum(w) - 1.0) > 1e-12:
            raise DomainError("weights must be positive, one per point, and sum to 1")
    # F(w z; w alpha, -1) has type 2 pi w delta, so the product has type 2 pi delta
    exts = tuple(build_extremal(wi * a, -1.0, d) for wi, a in zip(w, pts))
    return VanishingMajorant(base, pts, mode, 2.0 * d, w, exts)


def threshold_function(u):
    """4 sinh u - sinh 2u - 2u; the multiplicative minorant needs this <= 0."""
    return 4.0 * math.sinh(u) - math.sinh(2.0 * u) - 2.0 * u


def threshold_root(lo=1e-6, hi=10.0):
    """Smallest u > 0 beyond which threshold_function stays nonpositive.

    threshold_function has derivative 4 cosh u (1 - cosh u) < 0 for u > 0 and
    vanishes at 0, so it is negative on (0, inf) and the root is 0.  A bracket
    search is still performed so that a sign change would be found if present.
    """
    grid = np.linspace(lo, hi, 2001)
    vals = np.array([threshold_function(u) for u in grid])
    pos = np.nonzero(vals > 0)[0]
    if pos.size == 0:
        return 0.0
    k = pos[-1]
    return find_root(threshold_function, grid[k], grid[k + 1], 1e-13)


_THRESHOLD = None


def minorant_threshold_ok(point, delta):
    """True when u = pi delta Im(point) satisfies the multiplicative-minorant condition."""
    global _THRESHOLD
    p = as_complex(point, "point")
    if not p.imag > 0:
        raise NotUpperHalfPlane(f"point {p!r} is not in the upper half-plane")
    if _THRESHOLD is None:
        _THRESHOLD = threshold_root()
    u = math.pi * delta * p.imag
    return u >= _THRESHOLD and threshold_function(u) <= 0


def build_minorant(base: SelbergPair, point, mode) -> VanishingMinorant:
    """Minorant of the base interval vanishing at one upper half-plane point."""
    if mode not in MINORANT_MODES:
        raise DomainError(f"unknown minorant mode {mode!r}")
    if not isinstance(point, (complex, float, int)):
        pts = tuple(point)
        if len(pts) != 1:
            raise ModeArity("minorants take exactly one point")
        point = pts[0]
    (a,) = _upper((point,))
    d = base.delta
    if mode == "additive":
        ext = build_extremal(a, complex(base.c(a)), d)
        return VanishingMinorant(base, a, mode, d, ext)
    if not minorant_threshold_ok(a, d):
        raise ThresholdViolated(f"pi delta Im(alpha) = {math.pi * d * a.imag:.4g} is below the threshold")
    ext = build_extremal(a, 1.0, d)
    return VanishingMinorant(base, a, mode, 2.0 * d, ext)


@dataclass(frozen=True)
class RhoEstimate:
    integral_excess: float
    error_bound: float


def rho_upper_value(majorant: VanishingMajorant, tolerance=1e-6, method="auto") -> RhoEstimate:
    """Integral of (majorant - chi_I) over R.

    The Selberg part contributes exactly 1/delta.  In additive mode the rest is
    kappa(alpha, -C(alpha), delta) in closed form; otherwise, or when
    ``method="quadrature"``, it is integrated with ``tolerance`` as a relative
    target.
    """
    base = majorant.base
    if method not in ("auto", "closed", "quadrature"):
        raise DomainError(f"unknown method {method!r}")
    if majorant.mode == "additive" and method != "quadrature":
        return RhoEstimate(1.0 / base.delta + majorant.extremals[0].kappa, 0.0)
    if method == "closed":
        raise DomainError("closed form only available in additive mode")
    # the excess lies between 1/delta and 1/delta + ||C||_1 (prod(1 + sup F) - 1);
    # tolerance is relative to the larger of the two scales
    growth = math.prod(1.0 + ext.sup_bound for ext in majorant.extremals)
    c_l1 = base.length + 1.0 / base.delta
    atol = tolerance * max(1.0 / base.delta, c_l1 * (growth - 1.0))
    m = max(abs(base.a), abs(base.b), *(abs(p.real) for p in majorant.points))
    H = max(4.0 * m + 4.0, 20.0 / base.delta)
    while 2.0 * majorant.tail_coefficient(H) / H > 0.25 * atol:
        H *= 2.0
        if H > 1e9:
            break
    T = majorant.tail_coefficient(H)
    f = lambda t: np.real(majorant.excess_over_base(t))
    width = max(1.0 / base.delta, 1.0)
    res = integrate_line(f, T, H, 0.5 * atol, breakpoints=(base.a, base.b),
                         initial_panels=int(min(20000, max(16, 8 * H / width))))
    return RhoEstimate(1.0 / base.delta + float(res.value), res.error_bound)


@dataclass(frozen=True)
class RhoScan:
    interval: tuple
    points: tuple
    mode: str
    deltas: tuple
    excess: tuple
    error_bounds: tuple
    slope: float

    @property
    def lower_reference(self):
        """delta^-2 reference curve for the single-point lower bound."""
        return tuple(d ** -2 for d in self.deltas)

    def rows(self):
        return [
            {"delta": d, "integral_excess": e, "error_bound": b, "lower_reference": d ** -2}
            for d, e, b in zip(self.deltas, self.excess, self.error_bounds)
        ]


def rho_scan(interval, alpha, delta_list, mode="multiplicative", tolerance=1e-6) -> RhoScan:
    """Excess of the vanishing majorant across deltas and its log-log slope."""
    deltas = tuple(sorted(float(d) for d in delta_list))
    if len(deltas) < 3:
        raise DomainError("rho_scan needs at least three delta values")
    if min(deltas) <= 0:
        raise DomainError("deltas must be positive")
    points = (alpha,) if isinstance(alpha, (complex, float, int)) else tuple(alpha)
    excess, bounds = [], []
    for d in deltas:
        maj = build_majorant(build_selberg(interval, d), points, mode)
        est = rho_upper_value(maj, tolerance)
        excess.append(est.integral_excess)
        bounds.append(est.error_bound)
    slope = loglog_slope(deltas, excess)
    return RhoScan(tuple(interval), _upper(points), mode, deltas, tuple(excess), tuple(bounds), slope)


def factor_sup_bound(y, delta):
    """sup of F(.; i y, -1) at type 2 pi delta: delta * kappa = 4 pi delta y / (sinh(2 pi y delta) - 2 pi y delta)."""
    u = 2.0 * math.pi * y * delta
    if u < 0.5:
        # sinh u - u by series
        term = u ** 3 / 6.0
        s = term
        k = 3
        while abs(term) > 1e-18 * s:
            term *= u * u / ((k + 1) * (k + 2))
            s += term
            k += 2
    else:
        s = math.sinh(u) - u
    return 2.0 * u / s


def factor_sup_bound_simplified(y, delta):
    """The simpler small-delta estimate 2 / (2 pi y delta^2)."""
    return 2.0 / (2.0 * math.pi * y * delta ** 2)


def multipoint_integral_bound(phi_l1, phi_hat0, points, delta, simplified=False):
    """Upper bound for the integral of phi * prod_n (1 + F(z/N; alpha_n/N, -1)).

    phi_hat0 + N ||phi||_1 sum over nonempty subsets S of prod_{n in S} M_n, with
    M_n the sup bound of the n-th factor at Im = Im(alpha_n)/N.
    """
    pts = _upper(points)
    n = len(pts)
    bound_fn = factor_sup_bound_simplified if simplified else factor_sup_bound
    sups = [bound_fn(p.imag / n, delta) for p in pts]
    total = 0.0
    for k in range(1, n + 1):
        for subset in combinations(sups, k):
            total += math.prod(subset)
    return phi_hat0 + n * phi_l1 * total
