"""Principal component analysis over the sample covariance matrix."""

from dataclasses import dataclass

import numpy as np

from ._validate import as_matrix, check_feature_count
from .errors import AllZeroVariance, TooFewRows, TooManyComponents
from .linalg import symmetric_eigen


@dataclass
class PcaModel:
    mean: np.ndarray
    eigenvalues: np.ndarray  # descending, clamped at 0
    components: np.ndarray  # orthonormal columns
    n_components_kept: int


def pca_fit(X) -> PcaModel:
    """Center, form Cov = Xc'Xc/(n-1), and eigendecompose it.

    Eigenvalues come back sorted descending with tiny negative roundoff
    clamped to zero; components are the matching orthonormal columns.
    """
    X = as_matrix(X)
    n, p = X.shape
    if n < 2:
        raise TooFewRows("need at least 2 rows for a covariance matrix")
    mean = X.mean(axis=0)
    Xc = X - mean
    cov = (Xc.T @ Xc) / (n - 1)
    vals, vecs = symmetric_eigen(cov)
    vals = np.maximum(vals, 0.0)
    return PcaModel(
        mean=mean, eigenvalues=vals, components=vecs, n_components_kept=p
    )


def pca_transform(model: PcaModel, X, n_components: int):
    X = as_matrix(X)
    check_feature_count(X, model.components.shape[0])
    if not (1 <= n_components <= model.components.shape[1]):
        raise TooManyComponents(
            f"n_components={n_components} not in [1, {model.components.shape[1]}]"
        )
    return (X - model.mean) @ model.components[:, :n_components]


def pca_inverse_transform(model: PcaModel, T):
    T = as_matrix(T, name="T")
    k = T.shape[1]
    if k > model.components.shape[1]:
        raise TooManyComponents(
            f"T has {k} columns but only {model.components.shape[1]} components exist"
        )
    return T @ model.components[:, :k].T + model.mean


def explained_variance_ratio(model: PcaModel, j: int) -> float:
    """(lambda_1 + .. + lambda_j) / (lambda_1 + .. + lambda_n).

    Computed from one cumulative sum so j = n is exactly 1.0.
    """
    n = model.eigenvalues.shape[0]
    if not (1 <= j <= n):
        raise TooManyComponents(f"j={j} not in [1, {n}]")
    cum = np.cumsum(model.eigenvalues)
    total = cum[-1]
    if total == 0.0:
        raise AllZeroVariance("all eigenvalues are zero")
    return float(cum[j - 1] / total)


def components_for_variance(model: PcaModel, target: float) -> int:
    """Smallest j whose explained variance ratio reaches target."""
    if not (0.0 < target <= 1.0):
        raise ValueError(f"target must be in (0, 1], got {target}")
    n = model.eigenvalues.shape[0]
    for j in range(1, n + 1):
        if explained_variance_ratio(model, j) >= target:
            return j
    return n
