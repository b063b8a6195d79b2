import numpy as np
import pytest

from quickml.errors import DegreeZero, RatioOutOfRange, ShapeMismatch, TooFewRows
from quickml.preprocessing import (
    min_max_apply,
    min_max_fit_transform,
    min_max_inverse,
    polynomial_features,
    standard_apply,
    standard_fit_transform,
    train_val_split,
)
from quickml.rng import Rng


def test_min_max_ramp():
    _, out = min_max_fit_transform(np.array([[2.0], [4.0], [6.0]]))
    np.testing.assert_array_equal(out[:, 0], [0.0, 0.5, 1.0])


def test_min_max_constant_column():
    _, out = min_max_fit_transform(np.array([[5.0], [5.0], [5.0]]))
    np.testing.assert_array_equal(out[:, 0], [0.0, 0.0, 0.0])


def test_min_max_bounds_random():
    rng = np.random.default_rng(10)
    X = rng.standard_normal((10, 3)) * 7.0 + 2.0
    state, out = min_max_fit_transform(X)
    assert out.min() >= 0.0 and out.max() <= 1.0
    np.testing.assert_array_equal(out.min(axis=0), np.zeros(3))
    np.testing.assert_array_equal(out.max(axis=0), np.ones(3))
    np.testing.assert_array_equal(state.min, X.min(axis=0))
    np.testing.assert_array_equal(state.max, X.max(axis=0))


def test_min_max_roundtrip():
    rng = np.random.default_rng(11)
    X = rng.standard_normal((25, 4)) * 3.0
    state, out = min_max_fit_transform(X)
    np.testing.assert_allclose(min_max_inverse(state, out), X, atol=1e-12)


def test_min_max_apply_new_rows():
    state, _ = min_max_fit_transform(np.array([[0.0], [10.0]]))
    out = min_max_apply(state, np.array([[5.0], [20.0]]))
    np.testing.assert_array_equal(out[:, 0], [0.5, 2.0])


def test_standard_two_points():
    _, out = standard_fit_transform(np.array([[1.0], [3.0]]))
    np.testing.assert_array_equal(out[:, 0], [-1.0, 1.0])


def test_standard_constant_column():
    _, out = standard_fit_transform(np.full((4, 1), 7.0))
    np.testing.assert_array_equal(out[:, 0], np.zeros(4))


def test_standard_moments():
    rng = np.random.default_rng(12)
    X = rng.standard_normal((20, 4)) * 5.0 - 3.0
    state, out = standard_fit_transform(X)
    assert np.all(np.abs(out.mean(axis=0)) < 1e-12)
    assert np.all(np.abs(out.std(axis=0) - 1.0) < 1e-12)
    np.testing.assert_allclose(state.mean, X.mean(axis=0))
    np.testing.assert_allclose(state.std, X.std(axis=0))


def test_standard_idempotent():
    rng = np.random.default_rng(13)
    X = rng.standard_normal((30, 3))
    _, once = standard_fit_transform(X)
    _, twice = standard_fit_transform(once)
    np.testing.assert_allclose(twice, once, atol=1e-12)


def test_standard_needs_two_rows():
    with pytest.raises(TooFewRows):
        standard_fit_transform(np.ones((1, 2)))


def test_standard_apply_uses_train_state():
    state, _ = standard_fit_transform(np.array([[0.0], [2.0]]))
    out = standard_apply(state, np.array([[4.0]]))
    np.testing.assert_array_equal(out[:, 0], [3.0])


def test_split_sizes_exact():
    X = np.arange(20.0).reshape(10, 2)
    y = np.arange(10.0)
    s = train_val_split(X, y, 0.2, Rng(1))
    assert s.X_train.shape == (8, 2)
    assert s.X_val.shape == (2, 2)
    assert s.y_train.shape == (8,)
    assert s.y_val.shape == (2,)


def test_split_rounds_then_clamps():
    X = np.arange(6.0).reshape(3, 2)
    y = np.arange(3.0)
    s = train_val_split(X, y, 0.5, Rng(2))
    # round(1.5) rounds half to even, giving 2 validation rows
    assert s.X_val.shape[0] == 2
    assert s.X_train.shape[0] == 1


def test_split_partitions_rows():
    rng = np.random.default_rng(14)
    X = rng.standard_normal((23, 3))
    y = rng.standard_normal(23)
    s = train_val_split(X, y, 0.3, Rng(7))
    together = np.vstack([s.X_train, s.X_val])
    assert sorted(map(tuple, together)) == sorted(map(tuple, X))
    assert sorted(np.concatenate([s.y_train, s.y_val])) == sorted(y)


def test_split_row_pairing_kept():
    X = np.arange(12.0).reshape(6, 2)
    y = X[:, 0] * 10.0
    s = train_val_split(X, y, 0.34, Rng(3))
    np.testing.assert_array_equal(s.y_train, s.X_train[:, 0] * 10.0)
    np.testing.assert_array_equal(s.y_val, s.X_val[:, 0] * 10.0)


def test_split_deterministic():
    X = np.arange(30.0).reshape(15, 2)
    y = np.arange(15.0)
    a = train_val_split(X, y, 0.2, Rng(42))
    b = train_val_split(X, y, 0.2, Rng(42))
    np.testing.assert_array_equal(a.X_val, b.X_val)
    np.testing.assert_array_equal(a.y_train, b.y_train)


def test_split_errors():
    X = np.ones((4, 2))
    y = np.ones(4)
    for bad in (0.0, 1.0, -0.1, 1.5):
        with pytest.raises(RatioOutOfRange):
            train_val_split(X, y, bad, Rng(0))
    with pytest.raises(ShapeMismatch):
        train_val_split(X, np.ones(5), 0.5, Rng(0))


def test_poly_single_feature():
    out = polynomial_features(np.array([[2.0]]), 2)
    np.testing.assert_array_equal(out, [[2.0, 4.0]])


def test_poly_cross_terms():
    out = polynomial_features(np.array([[2.0, 3.0]]), 2)
    np.testing.assert_array_equal(out, [[2.0, 3.0, 4.0, 6.0, 9.0]])


def test_poly_column_count():
    X = np.ones((2, 3))
    assert polynomial_features(X, 3).shape[1] == 19
    assert polynomial_features(X, 3, include_bias=True).shape[1] == 20


def test_poly_bias_column():
    out = polynomial_features(np.array([[5.0], [6.0]]), 1, include_bias=True)
    np.testing.assert_array_equal(out[:, 0], [1.0, 1.0])
    np.testing.assert_array_equal(out[:, 1], [5.0, 6.0])


def test_poly_degree_one_identity():
    rng = np.random.default_rng(15)
    X = rng.standard_normal((8, 4))
    np.testing.assert_array_equal(polynomial_features(X, 1), X)


def test_poly_degree_zero_rejected():
    with pytest.raises(DegreeZero):
        polynomial_features(np.ones((2, 2)), 0)
