import numpy as np
import pytest

from quickml.datasets import (
    TASK_CLASSIFICATION,
    TASK_REGRESSION,
    DatasetSpec,
    generate_synthetic,
    load_csv,
    load_dataset,
    parse_dataset_spec,
    save_csv,
    synthetic_beta,
)
from quickml.errors import MissingTargetColumn, NonNumericCell, SpecInvalid
from quickml.linear import fit_multiple
from quickml.logistic import logistic_fit, logistic_predict
from quickml.optim import OptimizerConfig, SvmConfig
from quickml.preprocessing import standard_fit_transform
from quickml.rng import Rng
from quickml.svm import svm_fit, svm_predict


def test_parse_synthetic_recipe():
    spec = parse_dataset_spec("synthetic:1000x7:regression", seed=3)
    assert spec.rows == 1000
    assert spec.cols == 7
    assert spec.task == TASK_REGRESSION
    assert spec.seed == 3
    assert spec.complexity == 7000
    assert spec.dataset_id == "synthetic:1000x7:regression"


def test_parse_classification_alias():
    spec = parse_dataset_spec("synthetic:5000x13:classification")
    assert spec.task == TASK_CLASSIFICATION


def test_parse_csv_path():
    spec = parse_dataset_spec("data/things.csv", target="label", task=TASK_CLASSIFICATION)
    assert not spec.is_synthetic
    assert spec.target == "label"
    assert spec.dataset_id == "things.csv"


def test_parse_rejects_bad_recipes():
    with pytest.raises(SpecInvalid):
        parse_dataset_spec("synthetic:5x3:regression")  # too few rows
    with pytest.raises(SpecInvalid):
        parse_dataset_spec("synthetic:100x0:regression")
    with pytest.raises(SpecInvalid):
        parse_dataset_spec("synthetic:100x3:ranking")
    with pytest.raises(SpecInvalid):
        parse_dataset_spec("synthetic-100x3")


def test_load_csv_basic(tmp_path):
    f = tmp_path / "small.csv"
    f.write_text("a,b,target\n1,2,3\n4,5,6\n7,8,9\n")
    spec = parse_dataset_spec(str(f))
    X, y = load_csv(str(f), spec)
    assert X.shape == (3, 2)
    np.testing.assert_array_equal(y, [3.0, 6.0, 9.0])
    np.testing.assert_array_equal(X[:, 0], [1.0, 4.0, 7.0])
    assert spec.rows == 3 and spec.cols == 2


def test_load_csv_target_position_free(tmp_path):
    f = tmp_path / "mid.csv"
    f.write_text("a,target,b\n1,9,2\n3,8,4\n")
    X, y = load_csv(str(f), parse_dataset_spec(str(f)))
    np.testing.assert_array_equal(y, [9.0, 8.0])
    np.testing.assert_array_equal(X, [[1.0, 2.0], [3.0, 4.0]])


def test_load_csv_non_numeric_cell(tmp_path):
    f = tmp_path / "bad.csv"
    f.write_text("a,b,target\n1,2,3\n4,5,6\n7,abc,9\n")
    with pytest.raises(NonNumericCell) as exc:
        load_csv(str(f), parse_dataset_spec(str(f)))
    assert exc.value.row == 2  # 0-based data row, header excluded
    assert exc.value.col == 1
    assert exc.value.col_name == "b"


def test_load_csv_missing_target(tmp_path):
    f = tmp_path / "nt.csv"
    f.write_text("a,b\n1,2\n")
    with pytest.raises(MissingTargetColumn):
        load_csv(str(f), parse_dataset_spec(str(f)))


def test_load_csv_missing_file():
    with pytest.raises(FileNotFoundError):
        load_csv("/nonexistent/x.csv", parse_dataset_spec("/nonexistent/x.csv"))


def test_csv_round_trip_bit_identical(tmp_path):
    rng = np.random.default_rng(140)
    X = rng.standard_normal((20, 4)) * 1e3
    y = rng.standard_normal(20) / 7.0
    f = tmp_path / "rt.csv"
    save_csv(str(f), X, y)
    X2, y2 = load_csv(str(f), parse_dataset_spec(str(f)))
    np.testing.assert_array_equal(X, X2)
    np.testing.assert_array_equal(y, y2)


def test_synthetic_beta_shape_and_values():
    b = synthetic_beta(4)
    assert b.shape == (4,)
    assert np.all(b != 0)
    np.testing.assert_allclose(b, [1.25, -1.5, 1.75, -2.0])


def test_regression_zero_noise_recovers_beta():
    spec = DatasetSpec(
        source="synthetic:200x5:regression",
        rows=200,
        cols=5,
        task=TASK_REGRESSION,
        noise=0.0,
    )
    X, y = generate_synthetic(spec, Rng(7))
    model = fit_multiple(X, y)
    np.testing.assert_allclose(model.coefficients[1:], synthetic_beta(5), atol=1e-8)
    assert abs(model.coefficients[0]) < 1e-8


def test_classification_nearly_separable():
    spec = DatasetSpec(
        source="synthetic:2000x4:binary-classification",
        rows=2000,
        cols=4,
        task=TASK_CLASSIFICATION,
        separation=10.0,
    )
    X, y = generate_synthetic(spec, Rng(8))
    Xs = standard_fit_transform(X)[1]
    log_state = logistic_fit(Xs, y, OptimizerConfig(learning_rate=0.5, max_epochs=100), Rng(1))
    assert float(np.mean(logistic_predict(log_state, Xs) == y)) >= 0.99
    y_pm = np.where(y == 1.0, 1.0, -1.0)
    svm_state = svm_fit(Xs, y_pm, SvmConfig(max_epochs=100, early_stop_accuracy=0.99))
    assert float(np.mean(svm_predict(svm_state, Xs) == y_pm)) >= 0.99


def test_classification_balanced_and_binary():
    spec = DatasetSpec(
        source="synthetic:501x3:binary-classification",
        rows=501,
        cols=3,
        task=TASK_CLASSIFICATION,
    )
    X, y = generate_synthetic(spec, Rng(9))
    assert X.shape == (501, 3)
    assert set(np.unique(y)) == {0.0, 1.0}
    assert abs(int(np.sum(y)) - 251) <= 1  # odd row goes to class 1


def test_same_seed_identical():
    spec = parse_dataset_spec("synthetic:100x3:regression", seed=11)
    Xa, ya = load_dataset(spec, Rng(11))
    Xb, yb = load_dataset(spec, Rng(11))
    np.testing.assert_array_equal(Xa, Xb)
    np.testing.assert_array_equal(ya, yb)


def test_generate_validates_shape():
    bad = DatasetSpec(source="s", rows=5, cols=3, task=TASK_REGRESSION)
    with pytest.raises(SpecInvalid):
        generate_synthetic(bad, Rng(0))
    bad2 = DatasetSpec(source="s", rows=50, cols=0, task=TASK_REGRESSION)
    with pytest.raises(SpecInvalid):
        generate_synthetic(bad2, Rng(0))
    bad3 = DatasetSpec(source="s", rows=50, cols=2, task="ranking")
    with pytest.raises(SpecInvalid):
        generate_synthetic(bad3, Rng(0))
