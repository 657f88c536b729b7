"""de Branges spaces: structure functions, their kernels and the weighted extremal bound.

For a Hermite-Biehler function E with A = (E + E*)/2, B = i(E - E*)/2,

    K_E(w, z) = (B(z) conj(A(w)) - A(z) conj(B(w))) / (pi (z - conj w)).

The removable singularity at z = conj(w) is evaluated from Taylor coefficients
of the numerator taken as means over a small symmetric contour.
"""
from dataclasses import dataclass, field
import math

import numpy as np

from .errors import DependentKernels, DomainError, NotUpperHalfPlane
from .numerics import as_complex, integrate_line
from .rkhs_core import solve_kernel_pair

__all__ = [
    "StructureFunction",
    "DBKernelData",
    "DBExtremal",
    "DependenceReport",
    "exponential",
    "linear",
    "linear_exponential",
    "from_callable",
    "hermite_biehler_check",
    "db_kernel",
    "db_dependence_check",
    "db_extremal_bound",
    "weighted_inner_product",
]

CONTOUR_RADIUS = 0.05
CONTOUR_POINTS = 32


@dataclass(frozen=True)
class StructureFunction:
    """Entire E with E_star(z) = conj(E(conj z)); caller asserts the Polya class."""

    E: object
    E_star: object
    descriptor: str = "custom"
    params: tuple = ()

    def A(self, z):
        z = np.asarray(z, dtype=complex)
        return 0.5 * (self.E(z) + self.E_star(z))

    def B(self, z):
        z = np.asarray(z, dtype=complex)
        return 0.5j * (self.E(z) - self.E_star(z))

    @property
    def oscillation_period(self):
        """Shortest period of kernel products on R, when known."""
        if self.descriptor in ("exponential", "linear_exponential"):
            return 1.0 / (2.0 * self.params[0])
        return None


def from_callable(E, E_star=None, descriptor="custom"):
    """Wrap a vectorized evaluator; E_star defaults to conj(E(conj z))."""
    if E_star is None:
        E_star = lambda z: np.conj(E(np.conj(np.asarray(z, dtype=complex))))
    return StructureFunction(E, E_star, descriptor)


def exponential(b):
    """E(z) = exp(-2 pi i b z); its space is Paley-Wiener with kernel type 2 pi b."""
    b = float(b)
    if not b > 0:
        raise DomainError("b must be positive")
    return StructureFunction(
        lambda z: np.exp(-2j * np.pi * b * np.asarray(z, dtype=complex)),
        lambda z: np.exp(2j * np.pi * b * np.asarray(z, dtype=complex)),
        "exponential", (b,))


def linear():
    """E(z) = z + i; a two-dimensional space with constant kernel 1/pi."""
    return StructureFunction(
        lambda z: np.asarray(z, dtype=complex) + 1j,
        lambda z: np.asarray(z, dtype=complex) - 1j,
        "linear", ())


def linear_exponential(b, omega):
    """E(z) = (z - omega) exp(-2 pi i b z) with Im(omega) < 0."""
    b = float(b)
    omega = as_complex(omega, "omega")
    if not b > 0:
        raise DomainError("b must be positive")
    if not omega.imag < 0:
        raise DomainError("omega must lie in the lower half-plane")
    oc = omega.conjugate()
    return StructureFunction(
        lambda z: (np.asarray(z, dtype=complex) - omega) * np.exp(-2j * np.pi * b * np.asarray(z, dtype=complex)),
        lambda z: (np.asarray(z, dtype=complex) - oc) * np.exp(2j * np.pi * b * np.asarray(z, dtype=complex)),
        "linear_exponential", (b, omega))


def hermite_biehler_check(structure: StructureFunction, n=100, seed=0):
    """|E(conj z)| < |E(z)| at n pseudo-random upper half-plane points."""
    rng = np.random.default_rng(seed)
    z = rng.uniform(-5, 5, n) + 1j * rng.uniform(0.05, 3, n)
    return bool(np.all(np.abs(structure.E(np.conj(z))) < np.abs(structure.E(z))))


@dataclass(frozen=True)
class DBKernelData:
    structure: StructureFunction
    radius: float = CONTOUR_RADIUS
    points: int = CONTOUR_POINTS

    def __call__(self, omega, z):
        return db_kernel(self, omega, z)


def _numerator(s, omega, z):
    return s.B(z) * np.conj(s.A(omega)) - s.A(z) * np.conj(s.B(omega))


def db_kernel(data: DBKernelData, omega, z):
    """K_E(omega, z), vectorized in z."""
    s = data.structure
    omega = as_complex(omega, "omega")
    z0 = np.asarray(z, dtype=complex)
    z = np.atleast_1d(z0)
    c = omega.conjugate()
    zeta = z - c
    near = np.abs(zeta) < 0.5 * data.radius
    with np.errstate(divide="ignore", invalid="ignore"):
        out = _numerator(s, omega, z) / (np.pi * zeta)
    if np.any(near):
        # Taylor coefficients a_k of N(c + x): mean of N(c + r e^{it}) (r e^{it})^-k
        m = data.points
        unit = np.exp(2j * np.pi * (np.arange(m) + 0.5) / m)
        ring = data.radius * unit
        vals = _numerator(s, omega, c + ring)
        ks = np.arange(1, m // 2)
        coef = np.array([np.mean(vals / ring ** k) for k in ks])
        # N(c + x)/x = sum_{k>=1} a_k x^(k-1)
        x = zeta[near]
        out[near] = np.polyval(coef[::-1], x) / np.pi
    out = out.reshape(z0.shape)
    return out[()] if out.ndim == 0 else out


@dataclass(frozen=True)
class DependenceReport:
    independent: bool
    gram_defect: float
    scale: float


def _gram(data, alpha):
    ac = alpha.conjugate()
    kaa = float(np.real(db_kernel(data, alpha, alpha)))
    kbb = float(np.real(db_kernel(data, ac, ac)))
    kab = complex(db_kernel(data, alpha, ac))
    return kaa, kbb, kab


def db_dependence_check(data: DBKernelData, alpha) -> DependenceReport:
    """Gram defect K(a,a) K(a*,a*) - |K(a,a*)|^2 with a* = conj(alpha)."""
    alpha = as_complex(alpha, "alpha")
    if not alpha.imag > 0:
        raise NotUpperHalfPlane("alpha must lie in the upper half-plane")
    kaa, kbb, kab = _gram(data, alpha)
    defect = kaa * kbb - abs(kab) ** 2
    scale = math.sqrt(max(kaa * kbb, 0.0))
    return DependenceReport(bool(defect > 1e-12 * scale ** 2), float(defect), scale)


@dataclass(frozen=True)
class DBExtremal:
    data: DBKernelData = field(repr=False)
    alpha: complex
    beta: complex
    bound: float
    lambda1: complex
    lambda2: complex

    def U(self, z):
        z = np.asarray(z, dtype=complex)
        return (self.lambda1 * db_kernel(self.data, self.alpha, z)
                + self.lambda2 * db_kernel(self.data, self.alpha.conjugate(), z))

    def F(self, z):
        z = np.asarray(z, dtype=complex)
        return self.U(z) * np.conj(self.U(np.conj(z)))

    def weighted_integral(self, rel_tol=1e-6):
        """Quadrature of F |E|^-2 over R with its tail bound, to rel_tol of the bound."""
        terms = [(self.lambda1, self.alpha), (self.lambda2, self.alpha.conjugate())]
        return weighted_inner_product(self.data, terms, None, rel_tol * self.bound)


def db_extremal_bound(data: DBKernelData, alpha, beta) -> DBExtremal:
    """Least weighted integral of F |E|^-2 over admissible F with F(alpha) = beta."""
    alpha = as_complex(alpha, "alpha")
    beta = as_complex(beta, "beta")
    if not alpha.imag > 0:
        raise NotUpperHalfPlane("alpha must lie in the upper half-plane")
    kaa, kbb, kab = _gram(data, alpha)
    if not (kaa > 0 and kbb > 0):
        raise DependentKernels("kernel diagonal is not positive")
    sol, l1, l2 = solve_kernel_pair(kaa, kbb, kab, beta)
    return DBExtremal(data, alpha, beta, sol.min_norm_sq, l1, l2)


def _envelope(s, omegas_coeffs):
    # |K_E(w, t)| / |E(t)| <= (|A(w)| + |B(w)|) / (pi |t - conj w|) on R
    c = 0.0
    for lam, w in omegas_coeffs:
        c += abs(lam) * (abs(complex(s.A(w))) + abs(complex(s.B(w)))) / math.pi
    return c


def weighted_inner_product(data: DBKernelData, left, right=None, tolerance=1e-6, half_width=None):
    """Quadrature of f conj(g) |E|^-2 over R for kernel combinations.

    ``left`` and ``right`` are lists of (coefficient, omega) pairs describing
    f = sum c K_E(omega, .); ``right=None`` means g = conj(f(conj .)), which
    for real t gives the integral of f f* |E|^-2.
    """
    s = data.structure
    pair_r = left if right is None else right
    cl = _envelope(s, left)
    cr = _envelope(s, pair_r)
    m = max(abs(w) for _, w in list(left) + list(pair_r))

    def f(t):
        t = np.asarray(t, dtype=complex)
        a = sum(c * db_kernel(data, w, t) for c, w in left)
        if right is None:
            b = sum(c * db_kernel(data, w, np.conj(t)) for c, w in left)
        else:
            b = sum(c * db_kernel(data, w, t) for c, w in right)
        return a * np.conj(b) / np.abs(s.E(t)) ** 2

    if half_width is None:
        # 2 T / H <= tolerance / 2 with T = cl cr (H / (H - m))^2 <= 2 cl cr
        H = max(4.0 * m + 4.0, 8.0 * cl * cr / tolerance)
    else:
        H = float(half_width)
    T = cl * cr * (H / (H - m)) ** 2
    return integrate_line(f, T, H, 0.5 * tolerance, initial_panels=int(min(20000, 4 * H)),
                          max_width=s.oscillation_period)
