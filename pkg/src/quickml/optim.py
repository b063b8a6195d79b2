"""Optimizer configuration and the momentum update rule."""

from dataclasses import dataclass
from typing import Union

import numpy as np

from ._validate import as_vector
from .errors import ShapeMismatch


@dataclass
class OptimizerConfig:
    learning_rate: float = 0.01
    momentum: float = 0.9
    max_epochs: int = 1000
    batch_size: Union[int, str] = "full"  # row count, or "full"
    optimizer: str = "momentum"  # "momentum" follows the first-moment rule;
    # "adam" adds the bias-corrected second moment (beta2, eps below)
    beta2: float = 0.999
    eps: float = 1e-8

    def validate(self):
        if not self.learning_rate > 0:
            raise ValueError("learning_rate must be positive")
        if not (0.0 <= self.momentum < 1.0):
            raise ValueError("momentum must be in [0, 1)")
        if self.max_epochs < 1:
            raise ValueError("max_epochs must be at least 1")
        if self.optimizer not in ("momentum", "adam"):
            raise ValueError(f"unknown optimizer {self.optimizer!r}")
        if self.batch_size != "full" and (
            not isinstance(self.batch_size, (int, np.integer)) or self.batch_size < 1
        ):
            raise ValueError("batch_size must be a positive count or 'full'")

    def resolve_batch(self, n: int) -> int:
        if self.batch_size == "full":
            return n
        return min(int(self.batch_size), n)


@dataclass
class SvmConfig(OptimizerConfig):
    regularization: float = 0.01
    early_stop_accuracy: float = 0.95

    def validate(self):
        super().validate()
        if not self.regularization > 0:
            raise ValueError("regularization must be positive")
        if not (0.0 < self.early_stop_accuracy <= 1.0):
            raise ValueError("early_stop_accuracy must be in (0, 1]")


@dataclass
class GradientModelState:
    weights: np.ndarray
    bias: float
    momentum_buffer: np.ndarray
    momentum_bias: float
    epoch_count_run: int
    loss_history: np.ndarray = None
    accuracy_history: np.ndarray = None


def momentum_step(buffer, grad, theta, alpha: float, beta: float):
    """One momentum update: buffer' = beta*buffer + (1-beta)*grad,
    theta' = theta - alpha*buffer'. Returns (buffer', theta')."""
    buffer = as_vector(buffer, name="buffer")
    grad = as_vector(grad, name="grad")
    theta = as_vector(theta, name="theta")
    if not (buffer.shape == grad.shape == theta.shape):
        raise ShapeMismatch("buffer, grad, and theta must share one length")
    new_buf = beta * buffer + (1.0 - beta) * grad
    return new_buf, theta - alpha * new_buf
