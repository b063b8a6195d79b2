"""Gaussian Naive Bayes with per-class feature statistics."""

from dataclasses import dataclass
from typing import List

import numpy as np

from ._validate import as_matrix, as_vector, check_feature_count, check_paired
from .errors import ClassTooSmall

# relative variance floor; keeps Eq-of-density denominators off zero for
# constant features (scaled by the largest feature variance in the data)
VAR_FLOOR_REL = 1e-9


@dataclass
class ClassStatistics:
    class_id: float
    prior: float
    mean: np.ndarray
    std: np.ndarray  # n-1 divisor


def nb_fit(X, labels) -> List[ClassStatistics]:
    """Per-class priors, means, and sample standard deviations.

    Every class needs at least 2 rows (the n-1 divisor demands it). A
    constant feature gets the smoothing floor instead of zero std.
    """
    X = as_matrix(X)
    labels = as_vector(labels, name="labels")
    check_paired(X, labels)
    n = X.shape[0]
    global_var = X.var(axis=0, ddof=0)
    vmax = float(global_var.max()) if global_var.size else 0.0
    floor = VAR_FLOOR_REL * (vmax if vmax > 0.0 else 1.0)
    stats = []
    for cls in np.unique(labels):
        rows = X[labels == cls]
        if rows.shape[0] < 2:
            raise ClassTooSmall(
                f"class {cls} has {rows.shape[0]} sample(s); need at least 2"
            )
        var = rows.var(axis=0, ddof=1)
        stats.append(
            ClassStatistics(
                class_id=float(cls),
                prior=rows.shape[0] / n,
                mean=rows.mean(axis=0),
                std=np.sqrt(np.maximum(var, floor)),
            )
        )
    return stats


def nb_log_scores(stats: List[ClassStatistics], X_query):
    """Log posterior scores, one column per class in stats order."""
    X_query = as_matrix(X_query, name="X_query")
    check_feature_count(X_query, stats[0].mean.shape[0], name="X_query")
    out = np.empty((X_query.shape[0], len(stats)))
    for j, st in enumerate(stats):
        z = (X_query - st.mean) / st.std
        log_density = -0.5 * z * z - np.log(st.std * np.sqrt(2.0 * np.pi))
        out[:, j] = np.log(st.prior) + log_density.sum(axis=1)
    return out


def nb_predict(stats: List[ClassStatistics], X_query):
    """Highest log(prior * product of Gaussian densities) wins.

    Scores are compared in log space; ties take the smallest class id.
    """
    scores = nb_log_scores(stats, X_query)
    ids = np.array([st.class_id for st in stats])
    order = np.argsort(ids, kind="stable")
    scores = scores[:, order]
    ids = ids[order]
    # argmax on the id-sorted columns: first max is the smallest class id
    return ids[np.argmax(scores, axis=1)]
