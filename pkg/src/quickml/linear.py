"""Closed-form regression models.

Simple linear regression runs off single-pass accumulator sums. Multiple
linear regression augments X with a leading ones column and solves the
normal equations through the LU path; polynomial regression is the same
solve after monomial feature expansion.
"""

from dataclasses import dataclass

import numpy as np

from ._validate import as_matrix, as_vector, check_feature_count, check_paired
from .errors import DegenerateX, ShapeMismatch, TooFewRows
from .linalg import solve_linear_system
from .preprocessing import polynomial_features


@dataclass
class SimpleLinearModel:
    slope: float
    intercept: float


@dataclass
class FittedLinearModel:
    coefficients: np.ndarray  # intercept first
    feature_count: int


@dataclass
class PolynomialModel:
    degree: int
    inner: FittedLinearModel


def fit_simple(x, y) -> SimpleLinearModel:
    """Least-squares line through (x, y) using the accumulator closed form.

    slope = (k*Sxy - Sy*Sx) / (k*Sxx - Sx^2), intercept = (Sy - slope*Sx)/k.
    """
    x = as_vector(x, name="x")
    y = as_vector(y, name="y")
    if x.shape[0] != y.shape[0]:
        raise ShapeMismatch(f"x has {x.shape[0]} entries, y has {y.shape[0]}")
    k = x.shape[0]
    if k < 2:
        raise TooFewRows("need at least 2 points")
    sx = float(np.sum(x))
    sy = float(np.sum(y))
    sxy = float(np.dot(x, y))
    sxx = float(np.dot(x, x))
    denom = k * sxx - sx * sx
    if denom < 1e-12 * k * sxx or sxx == 0.0:
        raise DegenerateX("x values are constant, slope is undefined")
    slope = (k * sxy - sy * sx) / denom
    intercept = (sy - slope * sx) / k
    return SimpleLinearModel(slope=slope, intercept=intercept)


def predict_simple(model: SimpleLinearModel, x):
    x = as_vector(x, name="x")
    return model.slope * x + model.intercept


def fit_multiple(X, y) -> FittedLinearModel:
    """Ordinary least squares via the normal equations.

    X gains a leading ones column; (X'X) beta = X'y is solved exactly.
    Collinear features surface as SingularMatrix from the solver.
    """
    X = as_matrix(X)
    y = as_vector(y)
    check_paired(X, y)
    n, p = X.shape
    if n < p + 1:
        raise TooFewRows(f"need at least {p + 1} rows to fit {p} features")
    Xa = np.empty((n, p + 1))
    Xa[:, 0] = 1.0
    Xa[:, 1:] = X
    gram = Xa.T @ Xa
    rhs = Xa.T @ y
    beta = solve_linear_system(gram, rhs)
    return FittedLinearModel(coefficients=beta, feature_count=p)


def predict_linear(model: FittedLinearModel, X):
    X = as_matrix(X)
    check_feature_count(X, model.feature_count)
    return model.coefficients[0] + X @ model.coefficients[1:]


def fit_polynomial(x, y, degree: int) -> PolynomialModel:
    """Polynomial regression: expand features, then fit_multiple."""
    expanded = polynomial_features(x, degree)
    return PolynomialModel(degree=degree, inner=fit_multiple(expanded, y))


def predict_polynomial(model: PolynomialModel, x):
    expanded = polynomial_features(x, model.degree)
    return predict_linear(model.inner, expanded)
