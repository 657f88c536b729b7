"""Self-checks grouped into suites, each reporting a residual against a threshold."""
from dataclasses import dataclass
import math

import numpy as np

from . import debranges, paley_wiener as pw, selberg, trig_circle, vanishing
from .numerics import trigamma

__all__ = ["CheckResult", "SUITES", "run_suite", "run_suites"]


@dataclass(frozen=True)
class CheckResult:
    suite: str
    check: str
    residual: float
    threshold: float

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.threshold)


_ALPHAS = (0.5j, 1j, 1 + 2j)
_BETAS = (-1, 1j, 2 - 1j)
_DELTAS = (0.1, 1.0, 10.0)


def _grid():
    for a in _ALPHAS:
        for b in _BETAS:
            for d in _DELTAS:
                yield a, b, d


def _kernel():
    rng = np.random.default_rng(0)
    w = rng.uniform(-3, 3, 200) + 1j * rng.uniform(-2, 2, 200)
    z = rng.uniform(-3, 3, 200) + 1j * rng.uniform(-2, 2, 200)
    k = pw.PWKernel(1.3)
    sym = np.max(np.abs(np.array([pw.kernel_eval(k, a, b) - np.conj(pw.kernel_eval(k, b, a))
                                  for a, b in zip(w, z)])))
    s = 1 + 0.5j + np.arange(40)
    rec = np.max(np.abs(trigamma(s) - trigamma(s + 1) - 1 / s ** 2))
    diag = 0.0
    for a in _ALPHAS:
        for d in _DELTAS:
            u = 2 * math.pi * a.imag * d
            exact = d * math.sinh(u) / u
            diag = max(diag, abs(pw.kernel_gram(a, d)[0] - exact) / exact)
    kk = pw.PWKernel(1.0)
    band = pw.verify_bandlimited(lambda t: pw.kernel_eval(kk, 1j, t) ** 2, 1.0, 200.0)
    return [
        ("hermitian_symmetry", float(sym), 1e-12),
        ("trigamma_recurrence", float(rec), 1e-12),
        ("kernel_diagonal", diag, 1e-12),
        ("sampling_reconstruction", band, 1e-6),
    ]


def _extremal():
    interp = 0.0
    real_closed = 0.0
    for a, b, d in _grid():
        e = pw.build_extremal(a, b, d)
        interp = max(interp, abs(e.F(a) - b) / (1 + abs(b)))
    for a in _ALPHAS:
        for b in (-1.0, 0.5, 2.0):
            for d in _DELTAS:
                u = 2 * math.pi * a.imag * d
                closed = 4 * math.pi * a.imag * abs(b) / (math.sinh(u) + math.copysign(u, b))
                real_closed = max(real_closed, abs(pw.kappa_value(a, b, d) - closed) / closed)
    e = pw.build_extremal(1 + 2j, 2 - 1j, 1.0)
    q = pw.integrate_extremal(e)
    quad = abs(q.value - e.kappa) / e.kappa
    return [
        ("interpolation_grid", interp, 1e-9),
        ("real_beta_closed_form", real_closed, 1e-12),
        ("integral_equals_kappa", quad, max(q.error_bound / e.kappa, 0.0) + 1e-15),
    ]


def _spectrum():
    e = pw.build_extremal(1 + 2j, 2 - 1j, 1.0)
    sf = pw.transform_closed_form(e)
    at0 = abs(sf(0.0) - e.kappa) / e.kappa
    edge = abs(sf(1.0)) + abs(sf(-1.0))
    t = np.linspace(-1.2, 1.2, 241)
    herm = float(np.max(np.abs(sf(-t) - np.conj(sf(t))))) / e.kappa
    xi = np.array([-0.7, 0.0, 0.3])
    probe = float(np.max(np.abs(pw.probe_transform(e, xi) - sf(xi)))) / e.kappa
    return [
        ("transform_at_zero", at0, 1e-12),
        ("transform_at_edge", edge, 0.0),
        ("hermitian_transform", herm, 1e-12),
        ("probe_agreement", probe, 1e-3),
    ]


def _selberg():
    pair = selberg.build_selberg((-1.0, 1.0), 1.0)
    exc = selberg.majorant_excess(pair)
    dfc = selberg.minorant_deficit(pair)
    t = np.linspace(-20, 20, 10001)
    chi = pair.chi(t)
    above = float(np.max(chi - np.real(pair.C(t))))
    below = float(np.max(np.real(pair.c(t)) - chi))
    return [
        ("majorant_excess", abs(exc.value - 1.0), max(exc.error_bound, 1e-12)),
        ("minorant_deficit", abs(dfc.value - 1.0), max(dfc.error_bound, 1e-12)),
        ("majorizes", max(0.0, above), 1e-10),
        ("minorizes", max(0.0, below), 1e-10),
    ]


def _vanishing():
    base = selberg.build_selberg((-1.0, 1.0), 1.0)
    t = np.linspace(-20, 20, 10001)
    chi = base.chi(t)
    out = []
    for mode, pts in (("additive", (1j,)), ("multiplicative", (0.5 + 1j,)), ("multipoint", (1j, 1 + 1j))):
        m = vanishing.build_majorant(base, pts, mode)
        vals = np.real(m(t))
        scale = 1 + float(np.max(np.abs(vals)))
        zero = max(abs(m(p)) for p in pts) / scale
        order = max(0.0, float(np.max(chi - vals)))
        out += [(f"{mode}_majorant_vanishes", zero, 1e-9), (f"{mode}_majorant_order", order, 1e-10)]
    low = vanishing.build_minorant(selberg.build_selberg((-1.0, 1.0), 2.0), 1j, "additive")
    vals = np.real(low(t))
    out.append(("additive_minorant_vanishes", abs(low(1j)) / (1 + float(np.max(np.abs(vals)))), 1e-9))
    out.append(("additive_minorant_order", max(0.0, float(np.max(vals - low.base.chi(t)))), 1e-10))
    add = vanishing.build_majorant(selberg.build_selberg((-1.0, 1.0), 0.5), (0.5 + 1j,), "additive")
    closed = vanishing.rho_upper_value(add).integral_excess
    quad = vanishing.rho_upper_value(add, method="quadrature").integral_excess
    out.append(("additive_closed_vs_quadrature", abs(closed - quad) / closed, 1e-6))
    return out


def _trig():
    ext = trig_circle.build_trig_extremal(1, 2, 1)
    interp = 0.0
    mean = 0.0
    theta = 2 * np.pi * np.arange(4096) / 4096
    circle = np.exp(1j * theta)
    for n in (1, 2, 4):
        for a in (2, 0.5j, 3 + 1j):
            for b in (1, -1, 1j):
                e = trig_circle.build_trig_extremal(n, a, b)
                interp = max(interp, abs(e(a) - b) / (1 + abs(b)))
                mean = max(mean, abs(np.mean(e(circle)) - e.mean) / max(e.mean, 1e-300))
    return [
        ("mean_closed_form", abs(ext.mean - 4 / 9), 1e-12),
        ("interpolation_grid", interp, 1e-10),
        ("circle_mean", mean, 1e-10),
    ]


def _debranges():
    lin = debranges.db_dependence_check(debranges.DBKernelData(debranges.linear()), 1j)
    worst = 0.0
    for a, b, d in _grid():
        data = debranges.DBKernelData(debranges.exponential(d / 2))
        bound = debranges.db_extremal_bound(data, a, b).bound
        k = pw.kappa_value(a, b, d)
        worst = max(worst, abs(bound - k) / k)
    hb = [debranges.hermite_biehler_check(s) for s in
          (debranges.exponential(0.5), debranges.linear(), debranges.linear_exponential(0.5, -1j))]
    bad = debranges.hermite_biehler_check(debranges.from_callable(lambda z: np.exp(1j * np.pi * z)))
    return [
        ("linear_dependent", abs(lin.gram_defect) + (1.0 if lin.independent else 0.0), 1e-10),
        ("exponential_matches_kappa", worst, 1e-10),
        ("hermite_biehler", float(sum(not h for h in hb) + int(bad)), 0.0),
    ]


SUITES = {
    "kernel": _kernel,
    "extremal": _extremal,
    "spectrum": _spectrum,
    "selberg": _selberg,
    "vanishing": _vanishing,
    "trig": _trig,
    "debranges": _debranges,
}


def run_suite(name):
    """Run one named suite; returns a list of CheckResult."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return [CheckResult(name, check, float(res), float(thr)) for check, res, thr in SUITES[name]()]


def run_suites(names):
    out = []
    for n in names:
        out.extend(run_suite(n))
    return out
