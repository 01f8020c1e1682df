import numpy as np
import pytest
from scipy import sparse

from reddit_sentiment.classify.random_forest import (
    LEAF,
    DecisionTree,
    default_max_features,
    grow_tree,
    train_rf,
)
from reddit_sentiment.features.vectorize import FeatureMatrix, Representation
from reddit_sentiment.features.vocabulary import build_vocabulary


def _features(rows, labels) -> FeatureMatrix:
    matrix = sparse.csr_matrix(np.asarray(rows, dtype=np.float64))
    vocabulary = build_vocabulary([[f"t{i}" for i in range(matrix.shape[1])]])
    return FeatureMatrix(matrix, np.asarray(labels), vocabulary, Representation.BOW)


def _noisy(seed: int = 0, n: int = 80) -> FeatureMatrix:
    rng = np.random.default_rng(seed)
    rows = rng.integers(0, 3, size=(n, 12))
    labels = (rows[:, 0] > rows[:, 1]).astype(int)
    return _features(rows, labels)


def test_grow_tree_midpoint_threshold():
    features = _features([[0], [1], [2], [3]], [0, 0, 1, 1])
    tree = grow_tree(features.matrix, features.labels, 1, np.random.default_rng(0), False)
    assert tree.feature[0] == 0
    assert tree.threshold[0] == 1.5
    assert tree.n_nodes == 3
    np.testing.assert_array_equal(tree.counts[0], [2, 2])
    np.testing.assert_array_equal(tree.predict(features.matrix), [0, 0, 1, 1])


def test_grow_tree_stops_at_max_depth():
    features = _features([[0], [1], [2], [3]], [0, 1, 0, 1])
    tree = grow_tree(features.matrix, features.labels, 1, np.random.default_rng(0), False, 0)
    assert tree.n_nodes == 1
    # a tied leaf is Negative
    np.testing.assert_array_equal(tree.predict(features.matrix), [0, 0, 0, 0])


def test_grow_tree_without_varying_terms():
    features = _features([[1, 2], [1, 2]], [0, 1])
    tree = grow_tree(features.matrix, features.labels, 2, np.random.default_rng(0), False)
    assert tree.n_nodes == 1
    assert tree.feature[0] == LEAF


def test_tree_fits_training_data_without_bootstrap():
    features = _noisy()
    tree = grow_tree(features.matrix, features.labels, 12, np.random.default_rng(0), False)
    distinct = {tuple(row) for row in features.matrix.toarray()}
    if len(distinct) == features.matrix.shape[0]:
        np.testing.assert_array_equal(tree.predict(features.matrix), features.labels)


def test_full_candidate_forest_equals_one_tree():
    features = _noisy()
    model = train_rf(features, n_trees=5, max_features=12, seed=1, bootstrap=False)
    tree = grow_tree(features.matrix, features.labels, 12, np.random.default_rng(9), False)
    fractions = model.positive_vote_fraction(features.matrix)
    np.testing.assert_array_equal(fractions, tree.predict(features.matrix).astype(float))


def test_duplicating_documents_keeps_predictions():
    features = _noisy(seed=2)
    doubled = _features(
        sparse.vstack([features.matrix, features.matrix]).toarray(),
        np.concatenate([features.labels, features.labels]),
    )
    model = train_rf(features, n_trees=3, max_features=12, seed=0, bootstrap=False)
    model_doubled = train_rf(doubled, n_trees=3, max_features=12, seed=0, bootstrap=False)
    np.testing.assert_array_equal(
        model.positive_vote_fraction(features.matrix),
        model_doubled.positive_vote_fraction(features.matrix),
    )


def test_train_rf_is_seeded_and_job_independent():
    features = _noisy(seed=3)
    first = train_rf(features, n_trees=10, seed=5)
    again = train_rf(features, n_trees=10, seed=5, n_jobs=2)
    other = train_rf(features, n_trees=10, seed=6)
    np.testing.assert_array_equal(
        first.positive_vote_fraction(features.matrix), again.positive_vote_fraction(features.matrix)
    )
    assert any(
        a.n_nodes != b.n_nodes or not np.array_equal(a.feature, b.feature)
        for a, b in zip(first.trees, other.trees)
    )
    assert first.max_features == default_max_features(12) == 3


def test_train_rf_learns_signal():
    features = _noisy(seed=4, n=200)
    model = train_rf(features, n_trees=30, seed=0)
    accuracy = np.mean((model.positive_vote_fraction(features.matrix) > 0.5) == features.labels)
    assert accuracy > 0.8


def test_decision_tree_apply_is_vectorized():
    tree = DecisionTree(
        feature=np.array([1, LEAF, LEAF]),
        threshold=np.array([0.5, 0.0, 0.0]),
        left=np.array([1, LEAF, LEAF]),
        right=np.array([2, LEAF, LEAF]),
        counts=np.array([[2, 2], [2, 0], [0, 2]]),
    )
    matrix = sparse.csr_matrix([[5.0, 0.0], [0.0, 1.0], [0.0, 0.5]])
    np.testing.assert_array_equal(tree.apply(matrix), [1, 2, 1])
    np.testing.assert_array_equal(tree.predict(matrix), [0, 1, 0])


def test_train_rf_rejects():
    features = _noisy()
    with pytest.raises(ValueError):
        train_rf(features, n_trees=0)
    with pytest.raises(ValueError):
        train_rf(features, max_features=13)
    with pytest.raises(ValueError):
        train_rf(features, max_features=0)
    model = train_rf(features, n_trees=1)
    with pytest.raises(ValueError):
        model.positive_vote_fraction(sparse.csr_matrix((1, 3)))
