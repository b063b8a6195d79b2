"""Input coercion shared by every model: dense float64 arrays, all finite."""

import numpy as np

from .errors import NonFiniteData, ShapeMismatch


def as_matrix(a, name="X", square=False):
    """Coerce to a C-contiguous float64 2-D array, rejecting NaN/Inf."""
    m = np.ascontiguousarray(a, dtype=np.float64)
    if m.ndim != 2:
        raise ShapeMismatch(f"{name} must be 2-D, got ndim={m.ndim}")
    if not np.all(np.isfinite(m)):
        raise NonFiniteData(f"{name} contains NaN or Inf")
    if square and m.shape[0] != m.shape[1]:
        raise ShapeMismatch(f"{name} must be square, got {m.shape}")
    return m


def as_vector(a, name="y"):
    """Coerce to a contiguous float64 1-D array, rejecting NaN/Inf."""
    v = np.ascontiguousarray(a, dtype=np.float64)
    if v.ndim != 1:
        raise ShapeMismatch(f"{name} must be 1-D, got ndim={v.ndim}")
    if not np.all(np.isfinite(v)):
        raise NonFiniteData(f"{name} contains NaN or Inf")
    return v


def check_paired(X, y, xname="X", yname="y"):
    if X.shape[0] != y.shape[0]:
        raise ShapeMismatch(
            f"{xname} has {X.shape[0]} rows but {yname} has length {y.shape[0]}"
        )


def check_feature_count(X, expected, name="X"):
    if X.shape[1] != expected:
        raise ShapeMismatch(
            f"{name} has {X.shape[1]} columns, model expects {expected}"
        )
