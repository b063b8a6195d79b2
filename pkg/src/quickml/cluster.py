"""K-Means clustering with seeded row-sample initialization."""

from dataclasses import dataclass

import numpy as np

from . import backend
from ._validate import as_matrix, check_feature_count
from .errors import KTooLarge, KZero
from .rng import Rng, shuffled_indices


@dataclass
class KMeansModel:
    k: int
    centroids: np.ndarray
    inertia: float
    iterations_run: int
    inertia_history: np.ndarray = None


def kmeans_fit(X, k: int, max_iterations: int = 300, tol: float = 1e-6, rng: Rng = None) -> KMeansModel:
    """Lloyd iteration from k distinct data rows chosen by the stream.

    Assignment then mean update, until the largest centroid displacement
    is at most tol or the iteration cap is hit. Clusters that lose all
    members are re-seeded with the point farthest from its assigned
    centroid. inertia_history holds the post-assignment inertia of every
    iteration and is non-increasing.
    """
    X = as_matrix(X)
    rng = rng or Rng(0)
    if k < 1:
        raise KZero("k must be at least 1")
    if k > X.shape[0]:
        raise KTooLarge(f"k={k} exceeds the {X.shape[0]} data rows")
    init_rows = shuffled_indices(X.shape[0], rng)[:k]
    centroids = X[init_rows].copy()
    C, labels, inertia, hist, iterations = backend.kernels().kmeans_lloyd(
        X, centroids, int(max_iterations), float(tol)
    )
    return KMeansModel(
        k=int(k),
        centroids=np.asarray(C),
        inertia=float(inertia),
        iterations_run=int(iterations),
        inertia_history=np.asarray(hist)[: int(iterations)].copy(),
    )


def kmeans_assign(model: KMeansModel, X_query):
    """Nearest-centroid index per row; ties go to the smaller index."""
    X_query = as_matrix(X_query, name="X_query")
    check_feature_count(X_query, model.centroids.shape[1], name="X_query")
    sq = backend.kernels().pairwise_sq_dists(X_query, model.centroids)
    return np.argmin(sq, axis=1).astype(np.int64)
