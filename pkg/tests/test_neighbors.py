import numpy as np
import pytest

from quickml.errors import KOutOfRange, ShapeMismatch
from quickml.neighbors import knn_fit, knn_predict


def test_k1_exact_match():
    X = np.array([[0.0, 0.0], [5.0, 5.0], [9.0, 1.0]])
    labels = np.array([0.0, 1.0, 2.0])
    model = knn_fit(X, labels, 1)
    np.testing.assert_array_equal(knn_predict(model, X), labels)


def test_separated_clusters():
    X = np.array([[0.0, 0.0]] * 3 + [[10.0, 10.0]] * 3)
    labels = np.array([0.0] * 3 + [1.0] * 3)
    model = knn_fit(X, labels, 3)
    assert knn_predict(model, np.array([[1.0, 1.0]]))[0] == 0.0
    assert knn_predict(model, np.array([[9.0, 9.0]]))[0] == 1.0


def test_matches_brute_force_oracle():
    rng = np.random.default_rng(90)
    X = rng.standard_normal((30, 4))
    labels = rng.integers(0, 3, 30).astype(float)
    queries = rng.standard_normal((10, 4))
    model = knn_fit(X, labels, 5)
    got = knn_predict(model, queries)
    for i in range(10):
        d = np.sqrt(((X - queries[i]) ** 2).sum(axis=1))
        order = np.argsort(d, kind="stable")[:5]
        votes = labels[order]
        best_count = 0
        chosen = None
        for c in sorted(set(votes)):
            cnt = int(np.sum(votes == c))
            s = d[order][votes == c].sum()
            key = (cnt, -s, -c)  # more votes, then closer, then smaller id
            if chosen is None or key > best_key:
                chosen, best_key = c, key
        assert got[i] == chosen


def test_vote_tie_broken_by_distance():
    # k=2: one neighbor of each class, class 1 strictly closer
    X = np.array([[0.0], [3.0]])
    labels = np.array([0.0, 1.0])
    model = knn_fit(X, labels, 2)
    assert knn_predict(model, np.array([[2.0]]))[0] == 1.0
    assert knn_predict(model, np.array([[1.0]]))[0] == 0.0


def test_full_tie_takes_smallest_id():
    X = np.array([[-1.0], [1.0]])
    labels = np.array([7.0, 3.0])
    model = knn_fit(X, labels, 2)
    # both neighbors equidistant, one vote each: smallest class id wins
    assert knn_predict(model, np.array([[0.0]]))[0] == 3.0


def test_k_equals_n_returns_majority():
    rng = np.random.default_rng(91)
    X = rng.standard_normal((9, 2))
    labels = np.array([1.0] * 5 + [0.0] * 4)
    model = knn_fit(X, labels, 9)
    queries = rng.standard_normal((6, 2)) * 10
    np.testing.assert_array_equal(knn_predict(model, queries), np.ones(6))


def test_row_permutation_invariance():
    rng = np.random.default_rng(92)
    X = rng.standard_normal((20, 3))
    labels = rng.integers(0, 2, 20).astype(float)
    queries = rng.standard_normal((8, 3))
    base = knn_predict(knn_fit(X, labels, 4), queries)
    perm = rng.permutation(20)
    shuffled = knn_predict(knn_fit(X[perm], labels[perm], 4), queries)
    np.testing.assert_array_equal(base, shuffled)


def test_k_bounds():
    X = np.ones((3, 1))
    labels = np.zeros(3)
    with pytest.raises(KOutOfRange):
        knn_fit(X, labels, 0)
    with pytest.raises(KOutOfRange):
        knn_fit(X, labels, 4)


def test_query_shape_checked():
    model = knn_fit(np.ones((3, 2)), np.zeros(3), 1)
    with pytest.raises(ShapeMismatch):
        knn_predict(model, np.ones((2, 3)))
