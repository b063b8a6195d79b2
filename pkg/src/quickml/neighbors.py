"""K-nearest neighbors classification by exact distance search."""

from dataclasses import dataclass

import numpy as np

from . import backend
from ._validate import as_matrix, as_vector, check_feature_count, check_paired
from .errors import KOutOfRange


@dataclass
class KnnModel:
    X: np.ndarray
    labels: np.ndarray
    k: int


def knn_fit(X, labels, k: int) -> KnnModel:
    X = as_matrix(X)
    labels = as_vector(labels, name="labels")
    check_paired(X, labels)
    if not (1 <= k <= X.shape[0]):
        raise KOutOfRange(f"k={k} must be in [1, {X.shape[0]}]")
    return KnnModel(X=X.copy(), labels=labels.copy(), k=int(k))


def knn_predict(model: KnnModel, X_query):
    """Majority vote over the k nearest stored rows (Euclidean).

    Vote ties go to the class with the smallest summed distance among
    its voting neighbors, then to the smallest class id.
    """
    X_query = as_matrix(X_query, name="X_query")
    check_feature_count(X_query, model.X.shape[1], name="X_query")
    sq = backend.kernels().pairwise_sq_dists(X_query, model.X)
    dists = np.sqrt(np.maximum(sq, 0.0))
    out = np.empty(X_query.shape[0])
    for i in range(X_query.shape[0]):
        order = np.argsort(dists[i], kind="stable")[: model.k]
        votes = model.labels[order]
        classes, counts = np.unique(votes, return_counts=True)
        top = counts.max()
        tied = classes[counts == top]
        if tied.shape[0] == 1:
            out[i] = tied[0]
            continue
        sums = np.array(
            [dists[i, order[votes == c]].sum() for c in tied]
        )
        best = sums.min()
        out[i] = tied[sums == best].min()  # smallest id among distance-tied
    return out
