"""Backend selection for the hot convolution kernel.

The compiled ``_ckernels`` module is used when it imports and
``LAURENTMED_PURE`` is unset; otherwise every call goes to ``_pykernels``.
The compiled path declines (returns ``None``) on int64 overflow, in which
case the exact Python path runs instead, so results never depend on the
backend.
"""
import os

from laurentmed import _pykernels

try:
    from laurentmed import _ckernels
except ImportError:  # extension not built
    _ckernels = None

if os.environ.get("LAURENTMED_PURE"):
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"


def convolve(n, exps_a, coefs_a, exps_b, coefs_b):
    if _ckernels is not None:
        out = _ckernels.convolve(n, exps_a, coefs_a, exps_b, coefs_b)
        if out is not None:
            return out
    return _pykernels.convolve(n, exps_a, coefs_a, exps_b, coefs_b)


def pure_convolve(n, exps_a, coefs_a, exps_b, coefs_b):
    return _pykernels.convolve(n, exps_a, coefs_a, exps_b, coefs_b)


def compiled_convolve(n, exps_a, coefs_a, exps_b, coefs_b):
    """Compiled kernel only; raises if the extension is unavailable."""
    if _ckernels is None:
        raise RuntimeError("compiled kernel not available")
    return _ckernels.convolve(n, exps_a, coefs_a, exps_b, coefs_b)
