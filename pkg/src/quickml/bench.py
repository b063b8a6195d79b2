"""Benchmark runner: seeded data, timed fits, schema-validated reports.

Timing protocol: one untimed warmup fit (which also absorbs any one-time
compilation cost of the compiled kernel build), then `repeats` timed
fits of the same deterministic training call, median reported. Metrics
are computed on a held-out validation split and labeled as such in the
config echo.
"""

import json
import time
from dataclasses import asdict, dataclass, field
from typing import List, Optional

import numpy as np
from jsonschema import validate as _schema_validate

from .cluster import kmeans_assign, kmeans_fit
from .datasets import (
    TASK_CLASSIFICATION,
    TASK_REGRESSION,
    DatasetSpec,
    load_dataset,
)
from .errors import IoError, KeyMismatch, QuickMLError, SpecInvalid
from .linear import (
    fit_multiple,
    fit_polynomial,
    fit_simple,
    predict_linear,
    predict_polynomial,
    predict_simple,
)
from .logistic import logistic_fit, logistic_predict
from .metrics import classification_metrics, regression_metrics
from .naive_bayes import nb_fit, nb_predict
from .neighbors import knn_fit, knn_predict
from .optim import OptimizerConfig, SvmConfig
from .pca import components_for_variance, explained_variance_ratio, pca_fit
from .preprocessing import standard_apply, standard_fit_transform, train_val_split
from .rng import Rng
from .svm import svm_fit, svm_predict
from . import backend

VAL_RATIO = 0.2
MIN_REPEATS = 3

REGRESSION_MODELS = ("mlr", "simple", "poly")
CLASSIFICATION_MODELS = ("logistic", "svm", "knn", "nb")
ANY_TASK_MODELS = ("kmeans", "pca", "noop")

REPORT_SCHEMA = {
    "type": "array",
    "minItems": 1,
    "items": {
        "type": "object",
        "required": [
            "dataset",
            "model",
            "config",
            "timings_ms",
            "training_time_ms",
            "metrics",
            "epochs_run",
            "complexity",
            "seed",
        ],
        "properties": {
            "dataset": {"type": "string"},
            "model": {"type": "string"},
            "config": {"type": "object"},
            "timings_ms": {
                "type": "array",
                "items": {"type": "number", "exclusiveMinimum": 0},
            },
            "training_time_ms": {"type": ["number", "null"]},
            "metrics": {"type": "object"},
            "epochs_run": {"type": ["integer", "null"]},
            "complexity": {"type": "integer", "minimum": 0},
            "seed": {"type": "integer"},
            "error": {"type": ["string", "null"]},
        },
        "additionalProperties": False,
    },
}


@dataclass
class BenchReport:
    dataset: str
    model: str
    config: dict
    timings_ms: List[float]
    training_time_ms: Optional[float]
    metrics: dict
    epochs_run: Optional[int]
    complexity: int
    seed: int
    error: Optional[str] = None

    def to_dict(self) -> dict:
        return asdict(self)


def parse_model(text: str):
    """Split `name` or `name:param` into (name, params dict)."""
    name, _, arg = text.partition(":")
    if name == "poly":
        return name, {"degree": int(arg) if arg else 2}
    if name == "knn":
        return name, {"k": int(arg) if arg else 5}
    if name == "kmeans":
        return name, {"k": int(arg) if arg else 2}
    if arg:
        raise SpecInvalid(f"model {name!r} takes no parameter, got {text!r}")
    known = REGRESSION_MODELS + CLASSIFICATION_MODELS + ANY_TASK_MODELS
    if name not in known:
        raise SpecInvalid(f"unknown model {name!r}")
    return name, {}


def models_for_task(task: str) -> List[str]:
    if task == TASK_REGRESSION:
        return ["simple", "mlr", "poly:2", "kmeans:2", "pca"]
    return ["logistic", "svm", "knn:5", "nb", "kmeans:2", "pca"]


def _optimizer_config(params: dict, for_svm: bool):
    keys = (
        "learning_rate",
        "momentum",
        "max_epochs",
        "batch_size",
        "optimizer",
        "regularization",
        "early_stop_accuracy",
    )
    picked = {k: v for k, v in params.items() if k in keys}
    if for_svm:
        return SvmConfig(**picked)
    picked.pop("regularization", None)
    picked.pop("early_stop_accuracy", None)
    return OptimizerConfig(**picked)


def _prepare(spec: DatasetSpec, model: str, params: dict, rng: Rng):
    """Load, split, and scale; returns the closures the timer drives."""
    X, y = load_dataset(spec, rng)
    split = train_val_split(X, y, VAL_RATIO, rng)
    Xtr, Xval = split.X_train, split.X_val
    ytr, yval = split.y_train, split.y_val
    scaled = model in CLASSIFICATION_MODELS
    if scaled:
        state, Xtr = standard_fit_transform(Xtr)
        Xval = standard_apply(state, Xval)
    fit_seed = (spec.seed * 0x9E3779B9 + 0x1234567) % (1 << 63)

    if model in ("mlr", "simple", "poly") and spec.task != TASK_REGRESSION:
        raise SpecInvalid(f"model {model} needs a regression dataset")
    if model in CLASSIFICATION_MODELS and spec.task != TASK_CLASSIFICATION:
        raise SpecInvalid(f"model {model} needs a classification dataset")

    if model == "mlr":
        def fit():
            return fit_multiple(Xtr, ytr)

        def evaluate(m):
            r = regression_metrics(yval, predict_linear(m, Xval))
            return asdict(r), None

    elif model == "simple":
        # one-feature closed form; multi-column data uses the first column
        def fit():
            return fit_simple(Xtr[:, 0], ytr)

        def evaluate(m):
            r = regression_metrics(yval, predict_simple(m, Xval[:, 0]))
            return asdict(r), None

    elif model == "poly":
        degree = params.get("degree", 2)

        def fit():
            return fit_polynomial(Xtr, ytr, degree)

        def evaluate(m):
            r = regression_metrics(yval, predict_polynomial(m, Xval))
            return asdict(r), None

    elif model == "logistic":
        cfg = _optimizer_config(params, for_svm=False)

        def fit():
            return logistic_fit(Xtr, ytr, cfg, Rng(fit_seed))

        def evaluate(m):
            r = classification_metrics(yval, logistic_predict(m, Xval))
            out = _class_metrics_dict(r)
            out["final_loss"] = float(m.loss_history[-1])
            return out, m.epoch_count_run

    elif model == "svm":
        cfg = _optimizer_config(params, for_svm=True)
        ytr_pm = np.where(ytr == 1.0, 1.0, -1.0)
        yval_pm = np.where(yval == 1.0, 1.0, -1.0)

        def fit():
            return svm_fit(Xtr, ytr_pm, cfg, Rng(fit_seed))

        def evaluate(m):
            r = classification_metrics(yval_pm, svm_predict(m, Xval))
            return _class_metrics_dict(r), m.epoch_count_run

    elif model == "knn":
        k = params.get("k", 5)

        def fit():
            return knn_fit(Xtr, ytr, k)

        def evaluate(m):
            r = classification_metrics(yval, knn_predict(m, Xval))
            return _class_metrics_dict(r), None

    elif model == "nb":
        def fit():
            return nb_fit(Xtr, ytr)

        def evaluate(m):
            r = classification_metrics(yval, nb_predict(m, Xval))
            return _class_metrics_dict(r), None

    elif model == "kmeans":
        k = params.get("k", 2)

        def fit():
            return kmeans_fit(Xtr, k, rng=Rng(fit_seed))

        def evaluate(m):
            assign = kmeans_assign(m, Xval)
            val_sq = ((Xval - m.centroids[assign]) ** 2).sum()
            return {
                "inertia": float(m.inertia),
                "val_inertia": float(val_sq),
                "iterations": int(m.iterations_run),
            }, None

    elif model == "pca":
        def fit():
            return pca_fit(Xtr)

        def evaluate(m):
            return {
                "total_variance": float(m.eigenvalues.sum()),
                "explained_top1": explained_variance_ratio(m, 1),
                "n_components_95": components_for_variance(m, 0.95),
            }, None

    elif model == "noop":
        def fit():
            return None

        def evaluate(m):
            return {}, None

    else:
        raise SpecInvalid(f"unknown model {model!r}")

    config_echo = dict(params)
    config_echo.update(
        {
            "val_ratio": VAL_RATIO,
            "scaled": scaled,
            "metrics_on": "validation",
            "backend": backend.active_backend(),
        }
    )
    return fit, evaluate, config_echo


def _class_metrics_dict(r) -> dict:
    m = r.matrix
    return {
        "accuracy": r.accuracy,
        "precision": r.precision,
        "recall": r.recall,
        "f1": r.f1,
        "confusion": {"TP": m.TP, "TN": m.TN, "FP": m.FP, "FN": m.FN},
    }


def run_benchmark(
    spec: DatasetSpec, model_name: str, config: dict = None, repeats: int = 5
) -> BenchReport:
    """Fit `model_name` on `spec`'s data `repeats` times, timed.

    Model errors come back inside the report (error field set, timings
    empty) rather than raising, so a sweep over models survives one bad
    combination.
    """
    if repeats < MIN_REPEATS:
        raise ValueError(f"repeats must be at least {MIN_REPEATS}")
    model, params = parse_model(model_name)
    params = {**params, **(config or {})}
    try:
        fit, evaluate, config_echo = _prepare(spec, model, params, Rng(spec.seed))
        fitted = fit()  # warmup, untimed
        timings = []
        for _ in range(repeats):
            t0 = time.perf_counter()
            fitted = fit()
            timings.append((time.perf_counter() - t0) * 1000.0)
        metrics, epochs = evaluate(fitted)
        return BenchReport(
            dataset=spec.dataset_id,
            model=model_name,
            config=config_echo,
            timings_ms=timings,
            training_time_ms=float(np.median(timings)),
            metrics=metrics,
            epochs_run=epochs,
            complexity=spec.complexity,
            seed=spec.seed,
        )
    except QuickMLError as exc:
        return BenchReport(
            dataset=spec.dataset_id,
            model=model_name,
            config=dict(params),
            timings_ms=[],
            training_time_ms=None,
            metrics={},
            epochs_run=None,
            complexity=spec.complexity,
            seed=spec.seed,
            error=f"{type(exc).__name__}: {exc}",
        )


def validate_reports(reports: List[dict]):
    _schema_validate(reports, REPORT_SCHEMA)


CSV_COLUMNS = [
    "dataset",
    "model",
    "config",
    "timings_ms",
    "training_time_ms",
    "metrics",
    "epochs_run",
    "complexity",
    "seed",
    "error",
]


def _fmt_cell(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (dict, list)):
        return json.dumps(value)  # nested blocks ride along as JSON text
    return str(value)


def emit_report(reports: List[BenchReport], fmt: str = "json", path: str = None) -> str:
    """Render reports as json, csv, or a fixed-width table.

    Returns the rendered text; writes it to `path` when given. The json
    form is validated against REPORT_SCHEMA before leaving the building.
    """
    if not reports:
        raise ValueError("no reports to emit")
    dicts = [r.to_dict() for r in reports]
    if fmt == "json":
        validate_reports(dicts)
        text = json.dumps(dicts, indent=2)
    elif fmt == "csv":
        import csv as _csv
        import io

        buf = io.StringIO()
        writer = _csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for d in dicts:
            writer.writerow([_fmt_cell(d[k]) for k in CSV_COLUMNS])
        text = buf.getvalue()
    elif fmt == "table":
        text = _render_table(dicts)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if path is not None:
        try:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
                if not text.endswith("\n"):
                    fh.write("\n")
        except OSError as exc:
            raise IoError(f"cannot write {path}: {exc}")
    return text


def _headline_metric(d: dict) -> str:
    m = d["metrics"]
    if "r2" in m:
        return f"r2={m['r2']:.4f}"
    if "accuracy" in m:
        # table view mirrors percentage-style accuracy reporting
        return f"acc={100.0 * m['accuracy']:.2f}%"
    if "inertia" in m:
        return f"inertia={m['inertia']:.4g}"
    if "explained_top1" in m:
        return f"top1={m['explained_top1']:.4f}"
    return "-"


def _render_table(dicts: List[dict]) -> str:
    headers = ["dataset", "model", "time_ms", "metric", "epochs", "complexity"]
    rows = []
    for d in dicts:
        t = d["training_time_ms"]
        rows.append(
            [
                d["dataset"],
                d["model"],
                "-" if t is None else f"{t:.3f}",
                "error" if d.get("error") else _headline_metric(d),
                "-" if d["epochs_run"] is None else str(d["epochs_run"]),
                str(d["complexity"]),
            ]
        )
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(headers)]
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)),
        "  ".join("-" * widths[i] for i in range(len(headers))),
    ]
    for r in rows:
        lines.append("  ".join(r[i].ljust(widths[i]) for i in range(len(headers))))
    return "\n".join(lines)


def load_report(path: str) -> List[dict]:
    """Read back a report file in either json or csv form."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}")
    stripped = text.lstrip()
    if stripped.startswith("["):
        return json.loads(text)
    import csv as _csv
    import io

    reader = _csv.reader(io.StringIO(text))
    header = next(reader)
    out = []
    for record in reader:
        d = dict(zip(header, record))
        row = {
            "dataset": d["dataset"],
            "model": d["model"],
            "config": json.loads(d["config"]) if d["config"] else {},
            "timings_ms": json.loads(d["timings_ms"]) if d["timings_ms"] else [],
            "training_time_ms": float(d["training_time_ms"]) if d["training_time_ms"] else None,
            "metrics": json.loads(d["metrics"]) if d["metrics"] else {},
            "epochs_run": int(d["epochs_run"]) if d["epochs_run"] else None,
            "complexity": int(d["complexity"]),
            "seed": int(d["seed"]),
            "error": d["error"] or None,
        }
        out.append(row)
    return out


@dataclass
class ComparisonRow:
    dataset: str
    model: str
    time_a_ms: Optional[float]
    time_b_ms: Optional[float]
    speed_ratio: Optional[float]  # time_b / time_a
    metric_deltas: dict = field(default_factory=dict)
    within_tolerance: bool = True


def _flatten_metrics(m: dict, prefix: str = ""):
    for k, v in m.items():
        if isinstance(v, dict):
            yield from _flatten_metrics(v, prefix + k + ".")
        elif isinstance(v, (int, float)):
            yield prefix + k, float(v)


def compare_reports(a: List[dict], b: List[dict], rtol: float = 1e-6, atol: float = 1e-9):
    """Row-by-row diff of two report lists keyed on (dataset, model).

    speed_ratio is b's median time over a's, so ratios above 1 mean a
    was faster. Metric deltas are b - a per shared numeric field;
    within_tolerance applies rtol/atol to those deltas (timings never
    gate). Raises KeyMismatch when the key sets differ.
    """
    index_a = {(r["dataset"], r["model"]): r for r in a}
    index_b = {(r["dataset"], r["model"]): r for r in b}
    if index_a.keys() != index_b.keys():
        only_a = sorted(index_a.keys() - index_b.keys())
        only_b = sorted(index_b.keys() - index_a.keys())
        raise KeyMismatch(f"unmatched rows: only_a={only_a} only_b={only_b}")
    rows = []
    for r in a:
        key = (r["dataset"], r["model"])
        ra, rb = index_a[key], index_b[key]
        ta, tb = ra["training_time_ms"], rb["training_time_ms"]
        ratio = (tb / ta) if (ta and tb) else None
        ma = dict(_flatten_metrics(ra["metrics"]))
        mb = dict(_flatten_metrics(rb["metrics"]))
        deltas = {}
        ok = True
        for k in sorted(ma.keys() & mb.keys()):
            delta = mb[k] - ma[k]
            deltas[k] = delta
            if abs(delta) > atol + rtol * abs(ma[k]):
                ok = False
        rows.append(
            ComparisonRow(
                dataset=key[0],
                model=key[1],
                time_a_ms=ta,
                time_b_ms=tb,
                speed_ratio=ratio,
                metric_deltas=deltas,
                within_tolerance=ok,
            )
        )
    return rows
