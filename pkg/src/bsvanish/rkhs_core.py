"""Minimal-norm element of a Hilbert space under a bilinear two-point constraint.

Given vectors u, v with ||u|| = ||v|| = sqrt(eta) and <u, v> = nu, find
h = lambda1 u + lambda2 v of least norm with <h, u> conj(<h, v>) = beta.  The
minimum is

    2 (|beta| eta - Re(gamma_conj beta) |nu|) / (eta^2 - |nu|^2)

where the phase of nu is absorbed into v.  The Paley-Wiener, circle and
de Branges modules all reduce to this 2x2 problem.
"""
from dataclasses import dataclass
import math

from .errors import DependentKernels, DomainError
from .numerics import as_complex

DEGENERACY_TOL = 1e-12


@dataclass(frozen=True)
class TwoPointProblem:
    """Gram data (eta, nu) and target value beta.

    ``gap`` optionally supplies eta - |nu| computed without cancellation.
    """

    eta: float
    nu: complex
    beta: complex
    gap: float | None = None

    def __post_init__(self):
        eta = float(self.eta)
        nu = as_complex(self.nu, "nu")
        beta = as_complex(self.beta, "beta")
        if not (eta > 0 and math.isfinite(eta)):
            raise DomainError(f"eta must be positive and finite, got {self.eta!r}")
        if abs(nu) > eta * (1 + 1e-12):
            raise DomainError("Cauchy-Schwarz violated: |nu| > eta")
        gap = self.gap
        if gap is None:
            gap = max(eta - abs(nu), 0.0)
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "gap", float(gap))

    @property
    def defect(self):
        """eta^2 - |nu|^2."""
        return self.gap * (self.eta + abs(self.nu))

    @property
    def relative_defect(self):
        return self.gap / self.eta * (1.0 + abs(self.nu) / self.eta)


@dataclass(frozen=True)
class TwoPointSolution:
    min_norm_sq: float
    lambda1: complex
    lambda2: complex
    gamma: complex


@dataclass(frozen=True)
class TwoPointResiduals:
    constraint: float
    norm: float


def solve_two_point(problem: TwoPointProblem, tol: float = DEGENERACY_TOL) -> TwoPointSolution:
    """Solve the two-point problem; raises DependentKernels if u, v are dependent."""
    eta, nu, beta, gap = problem.eta, problem.nu, problem.beta, problem.gap
    if problem.relative_defect <= tol:
        raise DependentKernels(
            f"kernels are linearly dependent: (eta^2-|nu|^2)/eta^2 = {problem.relative_defect:.3e}")
    r = abs(nu)
    gamma = nu / r if r > 0 else 1.0 + 0j
    if beta == 0:
        return TwoPointSolution(0.0, 0j, 0j, gamma)
    mod = abs(beta)
    # rotate v by gamma so <u, gamma_conj v> = r is real; normalise |beta| = 1
    bhat = gamma * beta / mod
    scale = math.sqrt(mod)
    s = eta + r
    l1 = (bhat + (bhat - 1.0) * r / gap) / s
    l2 = (1.0 + (1.0 - bhat) * r / gap) / s
    min_norm = 2.0 * mod * (1.0 + r * (1.0 - bhat.real) / gap) / s
    return TwoPointSolution(max(min_norm, 0.0), scale * l1, scale * gamma * l2, gamma)


def gram_products(eta, nu, lambda1, lambda2):
    """Return <h,u>, <h,v>, ||h||^2 for h = lambda1 u + lambda2 v."""
    hu = lambda1 * eta + lambda2 * nu.conjugate()
    hv = lambda1 * nu + lambda2 * eta
    norm = (abs(lambda1) ** 2 + abs(lambda2) ** 2) * eta + 2.0 * (lambda1 * lambda2.conjugate() * nu).real
    return hu, hv, norm


def verify_two_point(problem: TwoPointProblem, solution: TwoPointSolution) -> TwoPointResiduals:
    """Residuals of the constraint and of the norm, via Gram algebra."""
    hu, hv, norm = gram_products(problem.eta, problem.nu, solution.lambda1, solution.lambda2)
    return TwoPointResiduals(abs(hu * hv.conjugate() - problem.beta), abs(norm - solution.min_norm_sq))


def solve_kernel_pair(norm_u_sq, norm_v_sq, inner_uv, beta, gap=None, tol=DEGENERACY_TOL):
    """Two-point problem for kernels of unequal norm.

    Rescales u by s and v by 1/s with s = (||v||/||u||)^(1/2) so both have norm
    sqrt(eta), eta = ||u|| ||v||.  ``gap`` is eta - |<u,v>| if known.  Returns
    (solution, coefficient on u, coefficient on v).
    """
    nu_sq, nv_sq = float(norm_u_sq), float(norm_v_sq)
    if not (nu_sq > 0 and nv_sq > 0):
        raise DependentKernels("a kernel has zero norm")
    eta = math.sqrt(nu_sq * nv_sq)
    s = (nv_sq / nu_sq) ** 0.25
    sol = solve_two_point(TwoPointProblem(eta, inner_uv, beta, gap), tol)
    return sol, sol.lambda1 * s, sol.lambda2 / s
