"""Kernel backend selection.

The hot numeric kernels exist twice: a numba @njit build and a pure-numpy
build with identical signatures and semantics. Selection order:

  1. a programmatic override installed with `use(...)`,
  2. the QUICKML_BACKEND environment variable ("numba" or "numpy"),
  3. auto: numba when importable, numpy otherwise.

The env var is consulted on every dispatch, so exporting
QUICKML_BACKEND=numpy flips an already-imported process onto the fallback
path. `bench backends` times the two builds against each other.
"""

import importlib
import os
from contextlib import contextmanager

ENV_VAR = "QUICKML_BACKEND"
_BACKENDS = ("numba", "numpy")

_forced = None
_modules = {}


def numba_available():
    try:
        importlib.import_module("numba")
    except ImportError:
        return False
    return True


def active_backend():
    """Name of the backend the next kernel call will dispatch to."""
    if _forced is not None:
        return _forced
    env = os.environ.get(ENV_VAR, "").strip().lower()
    if env in _BACKENDS:
        return env
    if env not in ("", "auto"):
        raise ValueError(
            f"{ENV_VAR}={env!r} not understood; expected 'numba', 'numpy' or 'auto'"
        )
    return "numba" if numba_available() else "numpy"


def kernels():
    """The kernel module for the active backend (lazily imported)."""
    name = active_backend()
    mod = _modules.get(name)
    if mod is None:
        if name == "numba" and not numba_available():
            raise RuntimeError(
                f"backend 'numba' requested via {ENV_VAR} or use(), "
                "but numba is not importable"
            )
        mod = importlib.import_module(f"quickml._kernels.{name}_impl")
        _modules[name] = mod
    return mod


@contextmanager
def use(name):
    """Force a backend within a `with` block (tests, benchmarks)."""
    global _forced
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}")
    prev = _forced
    _forced = name
    try:
        yield
    finally:
        _forced = prev
