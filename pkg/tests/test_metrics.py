import numpy as np
import pytest

from quickml.errors import ConstantTarget, MoreThanTwoClasses, ShapeMismatch
from quickml.metrics import classification_metrics, confusion, regression_metrics


def test_confusion_perfect():
    m = confusion([1, 1, 0, 0], [1, 1, 0, 0])
    assert (m.TP, m.TN, m.FP, m.FN) == (2, 2, 0, 0)


def test_confusion_constant_predictor():
    m = confusion([1, 0, 1, 0], [1, 1, 1, 1])
    assert (m.TP, m.FP, m.TN, m.FN) == (2, 2, 0, 0)


def test_confusion_brute_force_tally():
    rng = np.random.default_rng(50)
    y_true = rng.integers(0, 2, 50)
    y_pred = rng.integers(0, 2, 50)
    m = confusion(y_true, y_pred)
    tp = tn = fp = fn = 0
    for t, p in zip(y_true, y_pred):
        if t == 1 and p == 1:
            tp += 1
        elif t == 0 and p == 0:
            tn += 1
        elif t == 0 and p == 1:
            fp += 1
        else:
            fn += 1
    assert (m.TP, m.TN, m.FP, m.FN) == (tp, tn, fp, fn)
    assert m.TP + m.TN + m.FP + m.FN == 50


def test_confusion_label_swap_symmetry():
    rng = np.random.default_rng(51)
    y_true = rng.integers(0, 2, 40)
    y_pred = rng.integers(0, 2, 40)
    a = confusion(y_true, y_pred, positive_label=1)
    b = confusion(y_true, y_pred, positive_label=0)
    assert (a.TP, a.TN, a.FP, a.FN) == (b.TN, b.TP, b.FN, b.FP)


def test_confusion_rejects_three_classes():
    with pytest.raises(MoreThanTwoClasses):
        confusion([0, 1, 2], [0, 1, 1])


def test_regression_perfect():
    y = np.array([1.0, 2.0, 5.0])
    r = regression_metrics(y, y)
    assert r.r2 == 1.0
    assert r.mse == 0.0 and r.mae == 0.0 and r.rmse == 0.0


def test_regression_mean_predictor_r2_zero():
    y = np.array([1.0, 2.0, 3.0, 10.0])
    r = regression_metrics(y, np.full(4, y.mean()))
    assert abs(r.r2) < 1e-15


def test_regression_hand_case():
    # residuals (-1, 0, 1): SSres = 2, SStot = 2
    r = regression_metrics([1.0, 2.0, 3.0], [2.0, 2.0, 2.0])
    assert abs(r.mse - 2.0 / 3.0) < 1e-15
    assert abs(r.mae - 2.0 / 3.0) < 1e-15
    assert abs(r.rmse - np.sqrt(2.0 / 3.0)) < 1e-15
    assert abs(r.r2) < 1e-15


def test_regression_constant_target_errors():
    with pytest.raises(ConstantTarget):
        regression_metrics([2.0, 2.0, 2.0], [1.0, 2.0, 3.0])


def test_regression_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        regression_metrics([1.0, 2.0], [1.0])


def test_regression_identities_randomized():
    rng = np.random.default_rng(52)
    for _ in range(1000):
        n = int(rng.integers(2, 12))
        y = rng.standard_normal(n)
        if np.ptp(y) == 0.0:
            continue
        p = rng.standard_normal(n)
        r = regression_metrics(y, p)
        assert abs(r.rmse * r.rmse - r.mse) <= 1e-12 * max(r.mse, 1e-300)
        assert r.mae <= r.rmse + 1e-12
        assert r.mse >= 0.0 and r.mae >= 0.0
        assert r.r2 <= 1.0


def test_classification_perfect():
    r = classification_metrics([1, 0, 1], [1, 0, 1])
    assert r.accuracy == r.precision == r.recall == r.f1 == 1.0


def test_classification_balanced_half():
    # one count in every confusion cell
    r = classification_metrics([1, 1, 0, 0], [1, 0, 1, 0])
    assert r.accuracy == 0.5
    assert r.precision == 0.5
    assert r.recall == 0.5
    assert r.f1 == 0.5


def test_classification_never_positive():
    r = classification_metrics([1, 1, 0], [0, 0, 0])
    assert r.precision == 0.0
    assert r.recall == 0.0
    assert r.f1 == 0.0


def test_classification_accuracy_identity():
    rng = np.random.default_rng(53)
    for _ in range(1000):
        n = int(rng.integers(1, 30))
        y = rng.integers(0, 2, n)
        p = rng.integers(0, 2, n)
        r = classification_metrics(y, p)
        assert r.accuracy == float(np.mean(y == p))
        if r.precision + r.recall > 0:
            h = 2 * r.precision * r.recall / (r.precision + r.recall)
            assert abs(r.f1 - h) < 1e-15
        for v in (r.accuracy, r.precision, r.recall, r.f1):
            assert 0.0 <= v <= 1.0
