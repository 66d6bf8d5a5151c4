"""Kernel backend selection.

The compiled extension is optional: if it was not built (no C compiler, no
Cython) the pure-Python implementation is used with identical semantics.
"""

from sympdec import _kernels_py

try:
    from sympdec import _speedups  # type: ignore[attr-defined]
except ImportError:
    _speedups = None

if _speedups is not None:
    matmul_num = _speedups.matmul_num
    BACKEND = "compiled"
else:
    matmul_num = _kernels_py.matmul_num
    BACKEND = "python"


def backend() -> str:
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return BACKEND
