"""Least-mean nonnegative Laurent polynomials on the unit circle.

For degree N and alpha off the circle (alpha != 0), F = p p* with
p = lambda1 K(alpha, .) + lambda2 K(1/conj(alpha), .) has F(alpha) = beta,
is nonnegative on |z| = 1 and has the least mean among such Laurent
polynomials of degree at most N.  Here K(w, z) = sum_{n=0}^N (z conj w)^n and
p*(z) = conj(p(1 / conj z)).
"""
from dataclasses import dataclass
import math

import numpy as np

from .errors import DependentKernels, ZeroArgument
from .numerics import as_complex
from .rkhs_core import solve_kernel_pair

__all__ = [
    "TrigExtremal",
    "circle_kernel",
    "circle_gram",
    "build_trig_extremal",
    "eval_trig_F",
    "laurent_coefficients",
]


def circle_kernel(N, omega, z):
    """sum_{n=0}^N (z conj(omega))^n by Horner; vectorized in z."""
    N = int(N)
    if N < 0:
        raise ValueError("degree must be nonnegative")
    w = np.asarray(z, dtype=complex) * np.conj(complex(omega))
    acc = np.ones_like(w)
    for _ in range(N):
        acc = acc * w + 1.0
    return acc[()] if acc.ndim == 0 else acc


def circle_gram(N, alpha):
    """(K(alpha,alpha), K(a*,a*), N+1, eta^2 - (N+1)^2) with a* = 1/conj(alpha).

    The last entry is the sum over m < n of (rho^((n-m)/2) - rho^(-(n-m)/2))^2,
    rho = |alpha|^2, which is exact in sign and free of cancellation.
    """
    rho = abs(alpha) ** 2
    k = np.arange(N + 1)
    kaa = float(np.sum(rho ** k))
    kbb = float(np.sum(rho ** (-k)))
    d = np.arange(1, N + 1)
    defect = float(np.sum((N + 1 - d) * (rho ** (d / 2) - rho ** (-d / 2)) ** 2))
    return kaa, kbb, float(N + 1), defect


@dataclass(frozen=True)
class TrigExtremal:
    degree: int
    alpha: complex
    beta: complex
    p_coeffs: np.ndarray
    mean: float

    @property
    def laurent(self):
        return laurent_coefficients(self.p_coeffs)

    def __call__(self, z):
        return eval_trig_F(self, z)


def build_trig_extremal(N, alpha, beta) -> TrigExtremal:
    """Least-mean p p* with value beta at alpha."""
    N = int(N)
    if N < 1:
        raise ValueError("degree must be a positive integer")
    alpha = as_complex(alpha, "alpha")
    beta = as_complex(beta, "beta")
    if alpha == 0 or abs(abs(alpha) - 1.0) <= 1e-9:
        raise DependentKernels("alpha must be nonzero and off the unit circle")
    astar = 1.0 / alpha.conjugate()
    kaa, kbb, nu, defect = circle_gram(N, alpha)
    eta = math.sqrt(kaa * kbb)
    gap = defect / (eta + nu)
    sol, cu, cv = solve_kernel_pair(kaa, kbb, nu, beta, gap)
    n = np.arange(N + 1)
    coeffs = cu * np.conj(alpha) ** n + cv * np.conj(astar) ** n
    return TrigExtremal(N, alpha, beta, coeffs, sol.min_norm_sq)


def laurent_coefficients(p):
    """Coefficients c_k, k = -N..N, of p(z) conj(p(1/conj z)) = sum c_k z^k."""
    p = np.asarray(p, dtype=complex)
    return np.correlate(p, p, mode="full")


def eval_trig_F(extremal: TrigExtremal, z):
    """F(z) = p(z) conj(p(1/conj z)) for z != 0."""
    z = np.asarray(z, dtype=complex)
    if np.any(z == 0):
        raise ZeroArgument("F is a Laurent polynomial and undefined at z = 0")
    p = extremal.p_coeffs[::-1]
    out = np.polyval(p, z) * np.conj(np.polyval(p, 1.0 / np.conj(z)))
    return out[()] if out.ndim == 0 else out
