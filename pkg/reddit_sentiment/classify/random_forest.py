"""Random forest of Gini decision trees"""
import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from joblib import Parallel, delayed
from scipy import sparse

from reddit_sentiment.classify.utils import check_dimension, check_training_data
from reddit_sentiment.features.vectorize import FeatureMatrix
from reddit_sentiment.lexsent.labels import NEGATIVE_CODE, POSITIVE_CODE

logger = logging.getLogger(__name__)

LEAF = -1


@dataclass(frozen=True)
class DecisionTree:
    """
    Binary decision tree stored as parallel node arrays; node 0 is the root

    A document goes left when its value of the split term is <= threshold.

    Attributes:
        feature: Split term index per node, LEAF for leaves
        threshold: Split threshold per node
        left: Left child per node, LEAF for leaves
        right: Right child per node, LEAF for leaves
        counts: Training documents of each class reaching each node, shape (n nodes, 2)
    """

    feature: np.ndarray
    threshold: np.ndarray
    left: np.ndarray
    right: np.ndarray
    counts: np.ndarray

    @property
    def n_nodes(self) -> int:
        """Number of nodes, leaves included"""
        return len(self.feature)

    @property
    def leaf_labels(self) -> np.ndarray:
        """Majority label per node; ties go to Negative"""
        return np.where(
            self.counts[:, POSITIVE_CODE] > self.counts[:, NEGATIVE_CODE],
            POSITIVE_CODE,
            NEGATIVE_CODE,
        )

    def apply(self, matrix: sparse.csr_matrix) -> np.ndarray:
        """Leaf reached by each row"""
        nodes = np.zeros(matrix.shape[0], dtype=np.int64)
        active = np.flatnonzero(self.feature[nodes] != LEAF)
        while len(active):
            features = self.feature[nodes[active]]
            values = np.asarray(matrix[active, features]).ravel()
            go_left = values <= self.threshold[nodes[active]]
            nodes[active] = np.where(
                go_left, self.left[nodes[active]], self.right[nodes[active]]
            )
            active = active[self.feature[nodes[active]] != LEAF]
        return nodes

    def predict(self, matrix: sparse.csr_matrix) -> np.ndarray:
        """Majority label of the leaf each row reaches"""
        return self.leaf_labels[self.apply(matrix)]


@dataclass(frozen=True)
class RFModel:
    """
    Trained random forest

    Attributes:
        trees: The trees
        n_trees: Number of trees
        max_features: Candidate terms per split
        seed: Master seed of the forest
        vocab_size: Number of vocabulary terms
        bootstrap: Whether every tree saw a bootstrap sample
        max_depth: Depth limit of the trees, None for unlimited
    """

    trees: tuple[DecisionTree, ...]
    n_trees: int
    max_features: int
    seed: int
    vocab_size: int
    bootstrap: bool = True
    max_depth: Optional[int] = None

    def positive_vote_fraction(self, matrix: sparse.spmatrix) -> np.ndarray:
        """Share of trees voting Positive for each row"""
        check_dimension(matrix.shape[1], self.vocab_size)
        matrix = sparse.csr_matrix(matrix)
        votes = np.zeros(matrix.shape[0])
        for tree in self.trees:
            votes += tree.predict(matrix) == POSITIVE_CODE
        return votes / len(self.trees)


def default_max_features(vocab_size: int) -> int:
    """Candidate terms per split when none is configured: floor(sqrt(vocab_size)), at least 1"""
    return max(1, math.isqrt(vocab_size))


def _best_split(values: np.ndarray, labels: np.ndarray) -> tuple[float, int, float]:
    """
    Best Gini split over the columns of a dense (documents x candidates) block

    Thresholds are midpoints between consecutive distinct values. Ties go to the first column,
    then to the smallest threshold.

    Returns:
        (weighted child impurity, column, threshold); column is -1 when no split exists
    """
    n = values.shape[0]
    order = np.argsort(values, axis=0, kind="stable")
    ordered = np.take_along_axis(values, order, axis=0)
    positives_left = np.cumsum(labels[order], axis=0)[:-1]
    n_left = np.arange(1, n, dtype=np.float64)[:, None]
    n_right = n - n_left
    positives_right = labels.sum() - positives_left
    # n_left * gini_left + n_right * gini_right
    impurity = (
        n
        - (positives_left**2 + (n_left - positives_left) ** 2) / n_left
        - (positives_right**2 + (n_right - positives_right) ** 2) / n_right
    ) / n
    impurity = np.where(ordered[1:] > ordered[:-1], impurity, np.inf)
    flat = int(np.argmin(impurity.T))
    column, position = divmod(flat, n - 1)
    best = impurity[position, column]
    if not np.isfinite(best):
        return np.inf, -1, 0.0
    threshold = (ordered[position, column] + ordered[position + 1, column]) / 2.0
    return float(best), column, float(threshold)


def grow_tree(
    matrix: sparse.csr_matrix,
    labels: np.ndarray,
    max_features: int,
    rng: np.random.Generator,
    bootstrap: bool = True,
    max_depth: Optional[int] = None,
) -> DecisionTree:
    """
    Grow one tree

    Every node draws terms in random order and keeps the first max_features that are not
    constant over its documents; the candidates are then searched in index order. Growth
    stops at pure nodes, nodes with fewer than 2 documents, nodes without a non-constant term
    and at max_depth.

    Args:
        matrix: Training documents
        labels: Label code per document
        max_features: Candidate terms per node
        rng: Source of the bootstrap sample and the term draws
        bootstrap: Train on n documents drawn with replacement instead of all documents
        max_depth: Depth limit, None for unlimited

    Returns:
        The tree
    """
    n, vocab_size = matrix.shape
    sample = rng.integers(0, n, size=n) if bootstrap else np.arange(n)
    feature, threshold, left, right, counts = [], [], [], [], []

    def new_node(rows: np.ndarray) -> int:
        feature.append(LEAF)
        threshold.append(0.0)
        left.append(LEAF)
        right.append(LEAF)
        counts.append(np.bincount(labels[rows], minlength=2))
        return len(feature) - 1

    stack = [(new_node(sample), sample, 0)]
    while stack:
        node, rows, depth = stack.pop()
        node_labels = labels[rows]
        if len(rows) < 2 or node_labels.min() == node_labels.max():
            continue
        if max_depth is not None and depth >= max_depth:
            continue
        block = matrix[rows]
        varying = (block.max(axis=0).toarray() > block.min(axis=0).toarray()).ravel()
        permutation = rng.permutation(vocab_size)
        candidates = np.sort(permutation[varying[permutation]][:max_features])
        if len(candidates) == 0:
            continue
        values = block[:, candidates].toarray()
        _, column, split = _best_split(values, node_labels.astype(np.float64))
        if column < 0:
            continue
        goes_left = values[:, column] <= split
        feature[node] = int(candidates[column])
        threshold[node] = split
        left[node] = new_node(rows[goes_left])
        right[node] = new_node(rows[~goes_left])
        stack.append((right[node], rows[~goes_left], depth + 1))
        stack.append((left[node], rows[goes_left], depth + 1))

    return DecisionTree(
        feature=np.asarray(feature, dtype=np.int64),
        threshold=np.asarray(threshold, dtype=np.float64),
        left=np.asarray(left, dtype=np.int64),
        right=np.asarray(right, dtype=np.int64),
        counts=np.asarray(counts, dtype=np.int64).reshape(-1, 2),
    )


def train_rf(
    features: FeatureMatrix,
    n_trees: int = 100,
    max_features: Optional[int] = None,
    seed: int = 0,
    bootstrap: bool = True,
    max_depth: Optional[int] = None,
    n_jobs: int = 1,
) -> RFModel:
    """
    Train a random forest

    Each tree gets its own seed spawned from the master seed, so the forest does not depend on
    n_jobs.

    Args:
        features: Training documents
        n_trees: Number of trees, >= 1
        max_features: Candidate terms per split, default floor(sqrt(|vocab|))
        seed: Master seed
        bootstrap: Train each tree on a bootstrap sample
        max_depth: Depth limit of the trees
        n_jobs: Trees grown in parallel

    Returns:
        The model
    """
    if n_trees < 1:
        raise ValueError(f"n_trees must be >= 1, got {n_trees}")
    labels = check_training_data(features.matrix, features.labels)
    matrix = sparse.csr_matrix(features.matrix, dtype=np.float64)
    vocab_size = matrix.shape[1]
    if max_features is None:
        max_features = default_max_features(vocab_size)
    if not 1 <= max_features <= vocab_size:
        raise ValueError(f"max_features must be in [1, {vocab_size}], got {max_features}")

    tree_seeds = np.random.SeedSequence(seed).spawn(n_trees)
    trees = Parallel(n_jobs=n_jobs)(
        delayed(grow_tree)(
            matrix, labels, max_features, np.random.default_rng(tree_seed), bootstrap, max_depth
        )
        for tree_seed in tree_seeds
    )
    logger.debug("Grew %d trees, %d nodes in total", n_trees, sum(t.n_nodes for t in trees))
    return RFModel(
        trees=tuple(trees),
        n_trees=int(n_trees),
        max_features=int(max_features),
        seed=int(seed),
        vocab_size=int(vocab_size),
        bootstrap=bool(bootstrap),
        max_depth=max_depth,
    )
