"""Backend selection for the dense mod-p polynomial kernels.

The compiled module is used when it imported and the modulus fits in 31
bits.  Setting ``MULSPEC_PURE_PYTHON=1`` forces the Python backend.
"""

import os

from . import _pykernels as py

try:
    if os.environ.get("MULSPEC_PURE_PYTHON") == "1":
        raise ImportError("pure python requested")
    from . import _ckernels as c
except ImportError:
    c = None

BACKEND = "cython" if c is not None else "python"

_SMALL = 1 << 31

__all__ = ["BACKEND", "add", "sub", "scale", "mul", "divmod_", "rem",
           "mulmod", "powmod", "evaluate", "backend_for"]


def backend_for(p):
    if c is not None and p < _SMALL:
        return c
    return py


def add(a, b, p):
    return backend_for(p).add(a, b, p)


def sub(a, b, p):
    return backend_for(p).sub(a, b, p)


def scale(a, k, p):
    return backend_for(p).scale(a, k, p)


def mul(a, b, p):
    return backend_for(p).mul(a, b, p)


def divmod_(a, b, p):
    return backend_for(p).divmod_(a, b, p)


def rem(a, b, p):
    return backend_for(p).rem(a, b, p)


def mulmod(a, b, m, p):
    return backend_for(p).mulmod(a, b, m, p)


def powmod(a, e, m, p):
    return backend_for(p).powmod(a, e, m, p)


def evaluate(a, x, p):
    return backend_for(p).evaluate(a, x, p)
