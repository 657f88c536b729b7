"""Select the compiled kernels when available, else the numpy fallback.

Setting ``BSV_PURE_PYTHON=1`` forces the fallback.  ``BACKENDS`` lists every
importable implementation regardless of the selection.
"""
import os

from . import _fallback

try:
    from . import _kernels
except ImportError:
    _kernels = None

BACKENDS = {"python": _fallback}
if _kernels is not None:
    BACKENDS["cython"] = _kernels

if _kernels is not None and os.environ.get("BSV_PURE_PYTHON", "") not in ("1", "true", "yes"):
    NAME, impl = "cython", _kernels
else:
    NAME, impl = "python", _fallback
