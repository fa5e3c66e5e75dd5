"""Kernel backend selection.

``OGRAPH_PURSUIT_BACKEND`` picks the solver kernels at import time:
``numba`` (event-driven attractor, default when numba imports), ``numpy``
(synchronous sweeps) or ``auto``.  Both backends produce identical value
tables; ``set_backend`` swaps them at runtime for tests and benchmarks.
"""

from __future__ import annotations

import os

from . import _kernels_numpy

_REQUESTED = os.environ.get("OGRAPH_PURSUIT_BACKEND", "auto").lower()
if _REQUESTED not in ("auto", "numba", "numpy"):
    raise RuntimeError(
        f"OGRAPH_PURSUIT_BACKEND={_REQUESTED!r} (expected auto, numba or numpy)")

_kernels_numba = None
if _REQUESTED in ("auto", "numba"):
    try:
        from . import _kernels_numba
    except ImportError:
        if _REQUESTED == "numba":
            raise
        _kernels_numba = None

_active = _kernels_numba if _kernels_numba is not None else _kernels_numpy


def backend_name() -> str:
    return "numba" if _active is _kernels_numba and _active is not None else "numpy"


def available_backends() -> list[str]:
    names = ["numpy"]
    if _kernels_numba is not None:
        names.insert(0, "numba")
    return names


def set_backend(name: str) -> str:
    """Switch kernels; returns the previously active backend name."""
    global _active
    previous = backend_name()
    if name == "numba":
        if _kernels_numba is None:
            raise RuntimeError("numba backend unavailable")
        _active = _kernels_numba
    elif name == "numpy":
        _active = _kernels_numpy
    else:
        raise ValueError(f"unknown backend {name!r}")
    return previous


def kernels():
    return _active
