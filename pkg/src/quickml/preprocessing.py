"""Scaling, splitting, and polynomial feature expansion."""

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

import numpy as np

from ._validate import as_matrix, as_vector, check_paired
from .errors import DegreeZero, EmptyInput, RatioOutOfRange, TooFewRows
from .rng import Rng, shuffled_indices


@dataclass
class MinMaxScalerState:
    min: np.ndarray
    max: np.ndarray


@dataclass
class StandardScalerState:
    mean: np.ndarray
    std: np.ndarray


@dataclass
class SplitResult:
    X_train: np.ndarray
    X_val: np.ndarray
    y_train: np.ndarray
    y_val: np.ndarray
    val_ratio: float


def min_max_fit_transform(X):
    """Scale each column to [0, 1]; constant columns become all zeros."""
    X = as_matrix(X)
    if X.shape[0] == 0:
        raise EmptyInput("cannot fit a scaler on zero rows")
    lo = X.min(axis=0)
    hi = X.max(axis=0)
    span = hi - lo
    safe = np.where(span == 0.0, 1.0, span)
    out = (X - lo) / safe
    out[:, span == 0.0] = 0.0
    return MinMaxScalerState(min=lo, max=hi), out


def min_max_apply(state: MinMaxScalerState, X):
    X = as_matrix(X)
    span = state.max - state.min
    safe = np.where(span == 0.0, 1.0, span)
    out = (X - state.min) / safe
    out[:, span == 0.0] = 0.0
    return out


def min_max_inverse(state: MinMaxScalerState, X):
    X = as_matrix(X)
    return X * (state.max - state.min) + state.min


def standard_fit_transform(X):
    """Center and scale by the population standard deviation (divide by n).

    Zero-variance columns become all zeros instead of dividing by zero.
    """
    X = as_matrix(X)
    if X.shape[0] == 0:
        raise EmptyInput("cannot fit a scaler on zero rows")
    if X.shape[0] < 2:
        raise TooFewRows("standard scaling needs at least 2 rows")
    mu = X.mean(axis=0)
    sigma = X.std(axis=0)  # ddof=0
    state = StandardScalerState(mean=mu, std=sigma)
    return state, standard_apply(state, X)


def standard_apply(state: StandardScalerState, X):
    X = as_matrix(X)
    safe = np.where(state.std == 0.0, 1.0, state.std)
    out = (X - state.mean) / safe
    out[:, state.std == 0.0] = 0.0
    return out


def train_val_split(X, y, val_ratio: float, rng: Rng) -> SplitResult:
    """Shuffle rows and split them into train and validation parts.

    The validation size is round(val_ratio * n), clamped so neither side
    is empty. Same seed, same split.
    """
    X = as_matrix(X)
    y = as_vector(y)
    check_paired(X, y)
    if not (0.0 < val_ratio < 1.0):
        raise RatioOutOfRange(f"val_ratio must be in (0, 1), got {val_ratio}")
    n = X.shape[0]
    if n < 2:
        raise TooFewRows("need at least 2 rows to split")
    n_val = int(round(val_ratio * n))
    n_val = min(max(n_val, 1), n - 1)
    perm = shuffled_indices(n, rng)
    val_idx = perm[:n_val]
    train_idx = perm[n_val:]
    return SplitResult(
        X_train=X[train_idx],
        X_val=X[val_idx],
        y_train=y[train_idx],
        y_val=y[val_idx],
        val_ratio=float(val_ratio),
    )


def polynomial_features(X, degree: int, include_bias: bool = False):
    """Expand features into all monomials of total degree 1..degree.

    Cross-terms included, ordered graded-lexicographically (all degree-1
    terms, then degree-2, ...). For p inputs the expansion has
    C(p+degree, degree) - 1 columns, plus a leading ones column when
    include_bias is set.
    """
    X = as_matrix(X)
    if degree < 1:
        raise DegreeZero("degree must be at least 1")
    n, p = X.shape
    cols = []
    if include_bias:
        cols.append(np.ones(n))
    for d in range(1, degree + 1):
        for combo in combinations_with_replacement(range(p), d):
            col = np.ones(n)
            for j in combo:
                col = col * X[:, j]
            cols.append(col)
    out = np.column_stack(cols) if cols else np.empty((n, 0))
    assert out.shape[1] == int(include_bias) + comb(p + degree, degree) - 1
    return out
