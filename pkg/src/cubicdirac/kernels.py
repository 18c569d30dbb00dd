"""Backend selection for the integer kernels.

The compiled extension is used when it has been built; otherwise the
pure-Python module is used.  Setting ``CUBICDIRAC_PURE_PYTHON=1`` forces the
fallback (useful for benchmarking and for checking that both agree).
"""

from __future__ import annotations

import os

from . import _kernels_py

BACKEND = "python"

if os.environ.get("CUBICDIRAC_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py
    else:
        BACKEND = "cython"
else:
    _impl = _kernels_py

matmul = _impl.matmul
rref_den = _impl.rref_den

__all__ = ["BACKEND", "matmul", "rref_den"]
