import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bsvanish.errors import DependentKernels, DomainError
from bsvanish.rkhs_core import (
    TwoPointProblem,
    gram_products,
    solve_kernel_pair,
    solve_two_point,
    verify_two_point,
)
from oracles import two_point_bruteforce


def test_orthogonal_case():
    sol = solve_two_point(TwoPointProblem(1.0, 0.0, 1.0))
    assert sol.min_norm_sq == pytest.approx(2.0, abs=1e-15)
    assert sol.lambda1 == pytest.approx(1.0) and sol.lambda2 == pytest.approx(1.0)
    assert sol.gamma == 1
    res = verify_two_point(TwoPointProblem(1.0, 0.0, 1.0), sol)
    assert res.constraint <= 1e-14 and res.norm <= 1e-14


def test_real_gram_case():
    prob = TwoPointProblem(2.5, 2.0, 1.0)
    sol = solve_two_point(prob)
    assert abs(sol.min_norm_sq - 4 / 9) <= 1e-15
    res = verify_two_point(prob, sol)
    assert res.constraint <= 1e-12 and res.norm <= 1e-12


def test_closed_form_with_real_nu():
    eta, nu = 3.7, 1.2
    for beta in (-1 + 0j, 2 - 1j, 0.3j):
        sol = solve_two_point(TwoPointProblem(eta, nu, beta))
        expected = 2 * (abs(beta) * eta - nu * beta.real) / (eta ** 2 - nu ** 2)
        assert sol.min_norm_sq == pytest.approx(expected, rel=1e-13)


def test_perturbation_breaks_constraint():
    prob = TwoPointProblem(2.5, 2.0, 1.0)
    sol = solve_two_point(prob)
    bad = type(sol)(sol.min_norm_sq, sol.lambda1 + 1e-3, sol.lambda2, sol.gamma)
    assert verify_two_point(prob, bad).constraint >= 1e-4


def test_dependent_and_invalid():
    with pytest.raises(DependentKernels):
        solve_two_point(TwoPointProblem(1.0, 1.0, 1.0))
    with pytest.raises(DomainError):
        TwoPointProblem(1.0, 2.0, 1.0)
    with pytest.raises(DomainError):
        TwoPointProblem(-1.0, 0.0, 1.0)


def test_zero_beta_gives_zero():
    sol = solve_two_point(TwoPointProblem(2.0, 0.5 + 0.5j, 0.0))
    assert sol.min_norm_sq == 0 and sol.lambda1 == 0 and sol.lambda2 == 0


problems = st.tuples(
    st.floats(0.1, 50.0),
    st.floats(0.0, 0.98),
    st.floats(0.0, 2 * np.pi),
    st.floats(0.01, 10.0),
    st.floats(0.0, 2 * np.pi),
)


@settings(max_examples=150, deadline=None)
@given(problems, st.floats(0.01, 100.0))
def test_homogeneity(p, t):
    eta, ratio, phase, mag, bphase = p
    nu = eta * ratio * np.exp(1j * phase)
    beta = mag * np.exp(1j * bphase)
    a = solve_two_point(TwoPointProblem(eta, nu, beta)).min_norm_sq
    b = solve_two_point(TwoPointProblem(eta, nu, t * beta)).min_norm_sq
    assert b == pytest.approx(t * a, rel=1e-12)
    assert a > 0


@settings(max_examples=150, deadline=None)
@given(problems)
def test_constraint_and_norm_reproduced(p):
    eta, ratio, phase, mag, bphase = p
    nu = eta * ratio * np.exp(1j * phase)
    beta = mag * np.exp(1j * bphase)
    prob = TwoPointProblem(eta, nu, beta)
    sol = solve_two_point(prob)
    res = verify_two_point(prob, sol)
    assert res.constraint <= 1e-10 * max(1.0, abs(beta))
    assert res.norm <= 1e-10 * max(1.0, sol.min_norm_sq)


def test_bruteforce_agreement():
    rng = np.random.default_rng(42)
    for _ in range(30):
        eta = rng.uniform(0.5, 5)
        nu = eta * rng.uniform(0, 0.95) * np.exp(2j * np.pi * rng.uniform())
        beta = rng.uniform(0.1, 3) * np.exp(2j * np.pi * rng.uniform())
        got = solve_two_point(TwoPointProblem(eta, nu, beta)).min_norm_sq
        assert got == pytest.approx(two_point_bruteforce(eta, nu, beta), rel=1e-6)


def test_kernel_pair_unequal_norms():
    # u, v in C^2 with different norms: the scaled solution still meets the constraint
    u = np.array([2.0, 0.0], dtype=complex)
    v = np.array([0.3 + 0.1j, 0.5], dtype=complex)
    beta = 1.5 - 0.5j
    sol, cu, cv = solve_kernel_pair(np.vdot(u, u).real, np.vdot(v, v).real, np.vdot(v, u), beta)
    h = cu * u + cv * v
    assert abs(np.vdot(u, h) * np.conj(np.vdot(v, h)) - beta) <= 1e-12
    assert abs(np.vdot(h, h).real - sol.min_norm_sq) <= 1e-12


def test_gram_products_real_case():
    # h = u - v with |u|^2 = |v|^2 = 2, <u, v> = 0.5
    hu, hv, norm = gram_products(2.0, 0.5, 1.0, -1.0)
    assert norm == pytest.approx(3.0)
    assert abs(hu) == pytest.approx(1.5) and abs(hv) == pytest.approx(1.5)
