"""JIT switch for the numeric kernels.

Kernels are written in the numba-compatible subset of Python and decorated
with :func:`njit` from this module.  Setting ``BECOUNT_DISABLE_JIT=1`` (or
running without numba installed) leaves them as plain Python functions
operating on numpy arrays.
"""

import os

_flag = os.environ.get("BECOUNT_DISABLE_JIT", "").strip().lower()
DISABLE_JIT = _flag not in ("", "0", "false", "no")

try:
    import numba as _numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    _numba = None

JIT_ENABLED = _numba is not None and not DISABLE_JIT


def njit(fn):
    """Compile ``fn`` in nopython mode unless the JIT is disabled.

    The returned object always exposes ``py_func`` so callers (tests and the
    benchmark) can reach the uncompiled path.
    """
    if JIT_ENABLED:
        return _numba.njit(cache=True, nogil=True)(fn)
    fn.py_func = fn
    return fn
