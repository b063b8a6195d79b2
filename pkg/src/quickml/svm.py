"""Linear SVM trained on the regularized hinge loss with momentum."""

import numpy as np

from . import backend
from ._validate import as_matrix, as_vector, check_feature_count, check_paired
from .errors import DivergedToNaN, LabelsNotPlusMinusOne, SingleClass
from .optim import GradientModelState, SvmConfig


def svm_fit(X, y, cfg: SvmConfig = None, rng=None) -> GradientModelState:
    """Fit a linear max-margin classifier.

    Per sample the hinge subgradient is lam*w when the margin is >= 1,
    otherwise lam*w - y_i x_i (and -y_i for the bias). Batch-averaged
    gradients go through the momentum buffer, never raw. Training stops
    early once the whole-set sign accuracy reaches
    cfg.early_stop_accuracy at an epoch end. Weights start at zero, so
    every sample sits inside the margin on the first batch.

    rng is accepted for interface symmetry; zero init draws nothing.
    """
    cfg = cfg or SvmConfig()
    cfg.validate()
    X = as_matrix(X)
    y = as_vector(y)
    check_paired(X, y)
    if not np.all((y == -1.0) | (y == 1.0)):
        raise LabelsNotPlusMinusOne("labels must be -1 or +1")
    if np.all(y == y[0]):
        raise SingleClass("training needs both classes present")
    n, _ = X.shape
    w, b, vw, vb, acc_hist, epochs_run, status = backend.kernels().svm_train(
        X,
        y,
        float(cfg.learning_rate),
        float(cfg.momentum),
        float(cfg.regularization),
        float(cfg.early_stop_accuracy),
        int(cfg.max_epochs),
        cfg.resolve_batch(n),
    )
    if status != 0:
        raise DivergedToNaN("training produced non-finite parameters")
    return GradientModelState(
        weights=np.asarray(w),
        bias=float(b),
        momentum_buffer=np.asarray(vw),
        momentum_bias=float(vb),
        epoch_count_run=int(epochs_run),
        accuracy_history=np.asarray(acc_hist)[: int(epochs_run)].copy(),
    )


def svm_predict(state: GradientModelState, X):
    """sign(w.x + b) with sign(0) = +1."""
    X = as_matrix(X)
    check_feature_count(X, state.weights.shape[0])
    scores = X @ state.weights + state.bias
    return np.where(scores >= 0.0, 1.0, -1.0)
