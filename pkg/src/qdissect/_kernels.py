"""Kernel selection: compiled extension when built, pure Python otherwise.

Set QDISSECT_PURE_PYTHON=1 to force the fallback (used by the benchmark and
by tests that cross-check the two implementations).
"""

import os

from . import _kernels_py

_I64_MAX = 2**63 - 1

if os.environ.get("QDISSECT_PURE_PYTHON"):
    _speedups = None
else:
    try:
        from . import _speedups
    except ImportError:
        _speedups = None

BACKEND = "cython" if _speedups is not None else "python"


def _i64_safe(a, b):
    """True when every convolution accumulator provably fits in int64."""
    ma = max(map(abs, a), default=0)
    mb = max(map(abs, b), default=0)
    if ma == 0 or mb == 0:
        return True
    return ma * mb * min(len(a), len(b)) <= _I64_MAX


def conv(a, b, out_len):
    """Truncated convolution out[n] = sum a[i]*b[n-i], n < out_len."""
    if _speedups is None:
        return _kernels_py.conv(a, b, out_len)
    if _i64_safe(a, b):
        from array import array

        return _speedups.conv_i64(array("q", a), array("q", b), out_len)
    return _speedups.conv_obj(a, b, out_len)
