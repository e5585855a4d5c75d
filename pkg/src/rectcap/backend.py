"""Kernel backend selection.

The enumeration oracle's inner loops exist twice: JIT-compiled (numba) and
vectorized numpy.  The RECTCAP_BACKEND environment variable picks one
("numba" or "numpy"); unset, numba is used when importable and numpy
otherwise.  Both backends implement the same histogram contract and the
test suite holds them to identical outputs.
"""

from __future__ import annotations

import os

ENV_VAR = "RECTCAP_BACKEND"
BACKENDS = ("numba", "numpy")

_modules: dict[str, object] = {}


def _load(name: str):
    if name not in _modules:
        if name == "numba":
            from . import _kernels_numba as mod
        elif name == "numpy":
            from . import _kernels_numpy as mod
        else:
            raise ValueError(f"unknown backend {name!r}; expected one of {BACKENDS}")
        _modules[name] = mod
    return _modules[name]


def backend_name() -> str:
    """Resolve the active backend name from the environment."""
    env = os.environ.get(ENV_VAR, "").strip().lower()
    if env:
        if env not in BACKENDS:
            raise ValueError(f"{ENV_VAR}={env!r}; expected one of {BACKENDS}")
        return env
    try:
        import numba  # noqa: F401
    except ImportError:
        return "numpy"
    return "numba"


def kernels(name: str | None = None):
    """Return the kernel module for `name` (default: the active backend)."""
    return _load(name or backend_name())
