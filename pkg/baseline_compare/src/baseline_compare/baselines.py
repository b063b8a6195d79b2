"""Reference-library side of the comparison.

Estimators are pinned to the reference library's defaults (recorded in
each row's config echo). Timing mirrors the bench protocol: one untimed
warmup fit, then `repeats` timed fits, median reported. Metrics are
computed on the validation split with the same formulas and key names
the primary emits, so report rows diff field for field.
"""

import time

import numpy as np

from .errors import BaselineUnavailable

GATED_MODELS = ("mlr", "simple", "poly")  # exact solvers, deltas must vanish
MIN_REPEATS = 3


def require_baseline():
    try:
        import sklearn  # noqa: F401
    except ImportError as exc:
        raise BaselineUnavailable(f"reference library not importable: {exc}")
    return sklearn


def parse_model(text):
    name, _, arg = text.partition(":")
    if name == "poly":
        return name, {"degree": int(arg) if arg else 2}
    if name == "knn":
        return name, {"k": int(arg) if arg else 5}
    if name == "kmeans":
        return name, {"k": int(arg) if arg else 2}
    return name, {}


def _regression_metrics(y, pred):
    resid = y - pred
    mse = float(np.mean(resid * resid))
    centered = y - y.mean()
    ss_tot = float(centered @ centered)
    return {
        "r2": 1.0 - float(resid @ resid) / ss_tot,
        "mse": mse,
        "mae": float(np.mean(np.abs(resid))),
        "rmse": float(np.sqrt(mse)),
    }


def _classification_metrics(y, pred, pos=1.0):
    tp = int(np.sum((y == pos) & (pred == pos)))
    tn = int(np.sum((y != pos) & (pred != pos)))
    fp = int(np.sum((y != pos) & (pred == pos)))
    fn = int(np.sum((y == pos) & (pred != pos)))
    total = tp + tn + fp + fn
    precision = tp / (tp + fp) if (tp + fp) else 0.0
    recall = tp / (tp + fn) if (tp + fn) else 0.0
    f1 = (2 * precision * recall / (precision + recall)) if (precision + recall) else 0.0
    return {
        "accuracy": (tp + tn) / total if total else 0.0,
        "precision": precision,
        "recall": recall,
        "f1": f1,
        "confusion": {"TP": tp, "TN": tn, "FP": fp, "FN": fn},
    }


def _timed(fit, repeats):
    fitted = fit()  # warmup
    timings = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fitted = fit()
        timings.append((time.perf_counter() - t0) * 1000.0)
    return fitted, timings


def run_baseline(model_name, Xtr, ytr, Xval, yval,
                 dataset_id, seed, complexity, repeats=5):
    """One report row for the reference library's version of a model."""
    require_baseline()
    if repeats < MIN_REPEATS:
        raise ValueError(f"repeats must be at least {MIN_REPEATS}")
    import sklearn
    from sklearn.preprocessing import StandardScaler

    model, params = parse_model(model_name)
    scaled = model in ("logistic", "svm", "knn", "nb")
    if scaled:
        scaler = StandardScaler().fit(Xtr)
        Xtr = scaler.transform(Xtr)
        Xval = scaler.transform(Xval)

    epochs = None
    if model == "mlr":
        from sklearn.linear_model import LinearRegression
        estimator = "LinearRegression"

        def fit():
            return LinearRegression().fit(Xtr, ytr)

        fitted, timings = _timed(fit, repeats)
        metrics = _regression_metrics(yval, fitted.predict(Xval))

    elif model == "simple":
        from sklearn.linear_model import LinearRegression
        estimator = "LinearRegression"

        def fit():
            return LinearRegression().fit(Xtr[:, :1], ytr)

        fitted, timings = _timed(fit, repeats)
        metrics = _regression_metrics(yval, fitted.predict(Xval[:, :1]))

    elif model == "poly":
        from sklearn.linear_model import LinearRegression
        from sklearn.pipeline import make_pipeline
        from sklearn.preprocessing import PolynomialFeatures
        degree = params["degree"]
        estimator = "PolynomialFeatures+LinearRegression"

        def fit():
            # expansion inside the timed fit, matching what the primary times
            return make_pipeline(
                PolynomialFeatures(degree=degree, include_bias=False),
                LinearRegression(),
            ).fit(Xtr, ytr)

        fitted, timings = _timed(fit, repeats)
        metrics = _regression_metrics(yval, fitted.predict(Xval))

    elif model == "logistic":
        from sklearn.linear_model import LogisticRegression
        estimator = "LogisticRegression"

        def fit():
            return LogisticRegression().fit(Xtr, ytr)

        fitted, timings = _timed(fit, repeats)
        metrics = _classification_metrics(yval, fitted.predict(Xval))
        epochs = int(np.max(fitted.n_iter_))

    elif model == "svm":
        from sklearn.svm import LinearSVC
        estimator = "LinearSVC"
        ytr_pm = np.where(ytr == 1.0, 1.0, -1.0)
        yval_pm = np.where(yval == 1.0, 1.0, -1.0)

        def fit():
            return LinearSVC(random_state=seed).fit(Xtr, ytr_pm)

        fitted, timings = _timed(fit, repeats)
        metrics = _classification_metrics(yval_pm, fitted.predict(Xval))
        epochs = int(np.max(fitted.n_iter_))

    elif model == "knn":
        from sklearn.neighbors import KNeighborsClassifier
        estimator = "KNeighborsClassifier"
        k = params["k"]

        def fit():
            return KNeighborsClassifier(n_neighbors=k).fit(Xtr, ytr)

        fitted, timings = _timed(fit, repeats)
        metrics = _classification_metrics(yval, fitted.predict(Xval))

    elif model == "nb":
        from sklearn.naive_bayes import GaussianNB
        estimator = "GaussianNB"

        def fit():
            return GaussianNB().fit(Xtr, ytr)

        fitted, timings = _timed(fit, repeats)
        metrics = _classification_metrics(yval, fitted.predict(Xval))

    elif model == "kmeans":
        from sklearn.cluster import KMeans
        estimator = "KMeans"
        k = params["k"]

        def fit():
            return KMeans(n_clusters=k, random_state=seed).fit(Xtr)

        fitted, timings = _timed(fit, repeats)
        centers = fitted.cluster_centers_
        assign = fitted.predict(Xval)
        metrics = {
            "inertia": float(fitted.inertia_),
            "val_inertia": float(((Xval - centers[assign]) ** 2).sum()),
            "iterations": int(fitted.n_iter_),
        }

    elif model == "pca":
        from sklearn.decomposition import PCA
        estimator = "PCA"

        def fit():
            return PCA().fit(Xtr)

        fitted, timings = _timed(fit, repeats)
        ratios = np.cumsum(fitted.explained_variance_ratio_)
        metrics = {
            "total_variance": float(fitted.explained_variance_.sum()),
            "explained_top1": float(ratios[0]),
            "n_components_95": int(np.searchsorted(ratios, 0.95) + 1),
        }

    else:
        return {
            "dataset": dataset_id,
            "model": model_name,
            "config": {"library": "scikit-learn"},
            "timings_ms": [],
            "training_time_ms": None,
            "metrics": {},
            "epochs_run": None,
            "complexity": complexity,
            "seed": seed,
            "error": f"no baseline mapping for model {model_name!r}",
        }

    return {
        "dataset": dataset_id,
        "model": model_name,
        "config": {
            **params,
            "library": "scikit-learn",
            "library_version": sklearn.__version__,
            "estimator": estimator,
            "estimator_params": "library defaults",
            "scaled": scaled,
            "metrics_on": "validation",
        },
        "timings_ms": timings,
        "training_time_ms": float(np.median(timings)),
        "metrics": metrics,
        "epochs_run": epochs,
        "complexity": complexity,
        "seed": seed,
        "error": None,
    }
