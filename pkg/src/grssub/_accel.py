"""Numba availability switch.

Hot kernels are compiled with numba when it is importable and the
``GRSSUB_DISABLE_NUMBA`` environment variable is unset (or ``0``).  Otherwise
the pure-numpy implementations in :mod:`grssub.kernels` are used.
"""
from __future__ import annotations

import os

_FLAG = "GRSSUB_DISABLE_NUMBA"

try:
    import numba

    NUMBA_INSTALLED = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    NUMBA_INSTALLED = False


def numba_requested() -> bool:
    return os.environ.get(_FLAG, "0").strip().lower() in ("", "0", "false", "no")


USE_NUMBA = NUMBA_INSTALLED and numba_requested()


def njit(*args, **kwargs):
    """``numba.njit`` when numba is installed, identity decorator otherwise."""
    if NUMBA_INSTALLED:
        kwargs.setdefault("cache", True)
        return numba.njit(*args, **kwargs)

    def wrap(func):
        return func

    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]
    return wrap
