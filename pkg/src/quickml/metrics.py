"""Regression and binary classification metrics."""

from dataclasses import dataclass

import numpy as np

from ._validate import as_vector
from .errors import ConstantTarget, MoreThanTwoClasses, ShapeMismatch


@dataclass
class ConfusionMatrix:
    TP: int
    TN: int
    FP: int
    FN: int


@dataclass
class RegressionReport:
    r2: float
    mse: float
    mae: float
    rmse: float


@dataclass
class ClassificationReport:
    accuracy: float
    precision: float
    recall: float
    f1: float
    matrix: ConfusionMatrix


def _paired(y_true, y_pred):
    y_true = as_vector(y_true, name="y_true")
    y_pred = as_vector(y_pred, name="y_pred")
    if y_true.shape[0] != y_pred.shape[0]:
        raise ShapeMismatch(
            f"y_true has {y_true.shape[0]} entries, y_pred has {y_pred.shape[0]}"
        )
    return y_true, y_pred


def confusion(y_true, y_pred, positive_label=1) -> ConfusionMatrix:
    """2x2 contingency counts with the given label treated as positive."""
    y_true, y_pred = _paired(y_true, y_pred)
    labels = np.unique(np.concatenate([y_true, y_pred]))
    if labels.shape[0] > 2:
        raise MoreThanTwoClasses(f"expected binary labels, saw {labels.shape[0]} classes")
    pos = float(positive_label)
    tp = int(np.sum((y_true == pos) & (y_pred == pos)))
    tn = int(np.sum((y_true != pos) & (y_pred != pos)))
    fp = int(np.sum((y_true != pos) & (y_pred == pos)))
    fn = int(np.sum((y_true == pos) & (y_pred != pos)))
    return ConfusionMatrix(TP=tp, TN=tn, FP=fp, FN=fn)


def regression_metrics(y_true, y_pred) -> RegressionReport:
    """R², MSE, MAE, and RMSE of predictions against targets.

    R² is 1 - SSres/SStot; a constant target makes SStot zero, which is
    reported as ConstantTarget instead of a NaN score.
    """
    y_true, y_pred = _paired(y_true, y_pred)
    resid = y_true - y_pred
    mse = float(np.mean(resid * resid))
    mae = float(np.mean(np.abs(resid)))
    rmse = float(np.sqrt(mse))
    centered = y_true - y_true.mean()
    ss_tot = float(np.dot(centered, centered))
    if ss_tot == 0.0:
        raise ConstantTarget("R^2 is undefined when y_true is constant")
    ss_res = float(np.dot(resid, resid))
    r2 = 1.0 - ss_res / ss_tot
    return RegressionReport(r2=r2, mse=mse, mae=mae, rmse=rmse)


def classification_metrics(y_true, y_pred, positive_label=1) -> ClassificationReport:
    """Accuracy, precision, recall, and F1 from the 2x2 confusion counts.

    Zero-denominator cases return 0 rather than NaN: precision when no
    positives were predicted, recall when no positives exist, F1 when
    both are zero.
    """
    m = confusion(y_true, y_pred, positive_label)
    n = m.TP + m.TN + m.FP + m.FN
    accuracy = (m.TP + m.TN) / n if n else 0.0
    precision = m.TP / (m.TP + m.FP) if (m.TP + m.FP) else 0.0
    recall = m.TP / (m.TP + m.FN) if (m.TP + m.FN) else 0.0
    denom = precision + recall
    f1 = 2.0 * precision * recall / denom if denom else 0.0
    return ClassificationReport(
        accuracy=accuracy, precision=precision, recall=recall, f1=f1, matrix=m
    )
