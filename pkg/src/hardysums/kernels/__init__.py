"""Backend selection for the hot Hardy-sum loops.

The compiled extension is used when it was built; otherwise the numpy
fallback is selected. Set HARDYSUMS_PURE=1 to force the fallback (used
by the benchmark and for debugging).
"""
import os

import numpy as np

from . import _hardy_py

if os.environ.get("HARDYSUMS_PURE") == "1":
    _impl = _hardy_py
    BACKEND = "python"
else:
    try:
        from . import _hardy as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _hardy_py
        BACKEND = "python"


def available_backends():
    """Names of usable backends, compiled one first when present."""
    names = []
    if BACKEND == "cython":
        names.append("cython")
    elif os.environ.get("HARDYSUMS_PURE") == "1":
        try:
            from . import _hardy  # noqa: F401

            names.append("cython")
        except ImportError:
            pass
    names.append("python")
    return names


def get_backend(name):
    """Return the hardy_ab implementation for a backend name."""
    if name == "python":
        return _hardy_py.hardy_ab
    if name == "cython":
        from . import _hardy

        return _hardy.hardy_ab
    raise ValueError(f"unknown backend {name!r}")


def hardy_ab(c, ds):
    """Alternating floor sums (A, B) for 0 <= d < c, current backend."""
    ds = np.ascontiguousarray(ds, dtype=np.int64)
    if ds.size and (ds.min() < 0 or ds.max() >= c):
        raise ValueError("d values must lie in [0, c)")
    return _impl.hardy_ab(c, ds)
