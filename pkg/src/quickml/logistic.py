"""Logistic regression trained by batch gradient descent with momentum."""

import numpy as np

from . import backend
from ._validate import as_matrix, as_vector, check_feature_count, check_paired
from .errors import DivergedToNaN, NonBinaryLabels
from .optim import GradientModelState, OptimizerConfig
from .rng import Rng


# open-interval bounds: saturated outputs are nudged to the nearest
# representable value inside (0, 1) so log(p) and log(1-p) stay finite
_P_LO = np.nextafter(0.0, 1.0)
_P_HI = np.nextafter(1.0, 0.0)


def sigmoid(z):
    """1/(1+exp(-z)) with the stable branch for negative inputs.

    Outputs are strictly inside (0, 1): extreme z saturates to the
    closest representable neighbor of 0 or 1 instead of hitting them.
    """
    z = np.asarray(z, dtype=np.float64)
    out = np.empty_like(z)
    neg = z < 0
    out[~neg] = 1.0 / (1.0 + np.exp(-z[~neg]))
    ez = np.exp(z[neg])
    out[neg] = ez / (1.0 + ez)
    out = np.clip(out, _P_LO, _P_HI)
    if out.ndim == 0:
        return float(out)
    return out


def logistic_fit(X, y, cfg: OptimizerConfig = None, rng: Rng = None) -> GradientModelState:
    """Fit by batched gradient descent on the mean cross-entropy loss.

    Weights start uniform in [0, 1) from the supplied stream, bias at 0.
    Each batch applies the averaged gradient through the momentum buffer
    (or bias-corrected Adam when cfg.optimizer == "adam"). The mean loss
    over the whole training set is recorded at every epoch end.
    """
    cfg = cfg or OptimizerConfig()
    cfg.validate()
    rng = rng or Rng(0)
    X = as_matrix(X)
    y = as_vector(y)
    check_paired(X, y)
    if not np.all((y == 0.0) | (y == 1.0)):
        raise NonBinaryLabels("labels must be 0 or 1")
    n, p = X.shape
    w0 = rng.random(p)
    method = 1 if cfg.optimizer == "adam" else 0
    w, b, vw, vb, losses, epochs_run, status = backend.kernels().logistic_train(
        X,
        y,
        w0,
        float(cfg.learning_rate),
        float(cfg.momentum),
        int(cfg.max_epochs),
        cfg.resolve_batch(n),
        method,
        float(cfg.beta2),
        float(cfg.eps),
    )
    if status != 0:
        raise DivergedToNaN("training produced non-finite parameters or loss")
    return GradientModelState(
        weights=np.asarray(w),
        bias=float(b),
        momentum_buffer=np.asarray(vw),
        momentum_bias=float(vb),
        epoch_count_run=int(epochs_run),
        loss_history=np.asarray(losses)[: int(epochs_run)].copy(),
    )


def logistic_predict_proba(state: GradientModelState, X):
    X = as_matrix(X)
    check_feature_count(X, state.weights.shape[0])
    return sigmoid(X @ state.weights + state.bias)


def logistic_predict(state: GradientModelState, X, threshold: float = 0.5):
    proba = logistic_predict_proba(state, X)
    return np.where(proba >= threshold, 1.0, 0.0)
