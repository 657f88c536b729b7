import numpy as np
import pytest

from bsvanish import _backend, _fallback

pytestmark = pytest.mark.skipif("cython" not in _backend.BACKENDS, reason="compiled kernels not built")


@pytest.fixture(scope="module")
def points():
    rng = np.random.default_rng(11)
    z = rng.uniform(-30, 30, 5000) + 1j * rng.uniform(-4, 4, 5000)
    near = 1e-3 * (rng.normal(size=500) + 1j * rng.normal(size=500))
    ints = np.arange(-20, 21) + 1e-9j
    return np.ascontiguousarray(np.concatenate([z, near, ints]))


@pytest.mark.parametrize("name", ["csinc", "trigamma", "beurling"])
def test_kernels_agree(points, name):
    fast = getattr(_backend.BACKENDS["cython"], name)
    slow = getattr(_fallback, name)
    z = points + 40.0 if name == "trigamma" else points
    a, b = fast(z), slow(z)
    assert np.all(np.abs(a - b) <= 1e-12 * np.maximum(1.0, np.abs(b)))


def test_pw_kernel_agrees(points):
    a = _backend.BACKENDS["cython"].pw_kernel(0.3 + 1j, 1.7, points)
    b = _fallback.pw_kernel(0.3 + 1j, 1.7, points)
    assert np.all(np.abs(a - b) <= 1e-12 * np.maximum(1.0, np.abs(b)))


def test_selection_respects_environment(monkeypatch):
    import importlib

    monkeypatch.setenv("BSV_PURE_PYTHON", "1")
    mod = importlib.reload(_backend)
    try:
        assert mod.NAME == "python" and mod.impl is _fallback
    finally:
        monkeypatch.delenv("BSV_PURE_PYTHON")
        importlib.reload(_backend)
