"""Linear soft-margin SVM trained by stochastic subgradient descent"""
import logging
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from reddit_sentiment.classify.utils import check_dimension, check_training_data
from reddit_sentiment.features.vectorize import FeatureMatrix
from reddit_sentiment.lexsent.labels import POSITIVE_CODE

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SVMModel:
    """
    Trained linear SVM, decision value w.x + b

    Attributes:
        weights: One weight per vocabulary term
        bias: Intercept
        c: Soft-margin parameter used in training
        epochs: Passes over the training data
        seed: Seed of the shuffling
        batch_size: Documents per subgradient step
        objective_history: Best training objective after each epoch
    """

    weights: np.ndarray
    bias: float
    c: float
    epochs: int
    seed: int
    batch_size: int = 32
    objective_history: tuple[float, ...] = ()

    @property
    def vocab_size(self) -> int:
        """Number of vocabulary terms the model was trained on"""
        return len(self.weights)

    def decision_function(self, matrix: sparse.spmatrix) -> np.ndarray:
        """Signed distance score per row, positive means Positive"""
        check_dimension(matrix.shape[1], self.vocab_size)
        return np.asarray(matrix @ self.weights).ravel() + self.bias


def svm_objective(
    weights: np.ndarray, bias: float, matrix: sparse.spmatrix, signs: np.ndarray, c: float
) -> float:
    """
    Regularized hinge loss: ||w||^2 / (2 c n) + mean hinge loss, the bias is not penalized
    """
    n = matrix.shape[0]
    margins = signs * (np.asarray(matrix @ weights).ravel() + bias)
    penalty = (weights @ weights) / (2.0 * c * n)
    return float(penalty + np.maximum(0.0, 1.0 - margins).mean())


def train_svm(
    features: FeatureMatrix, c: float, epochs: int = 20, seed: int = 0, batch_size: int = 32
) -> SVMModel:
    """
    Train a linear soft-margin SVM

    Runs mini-batch Pegasos steps with learning rate 1 / (lambda t), lambda = 1 / (c n), over
    a seeded shuffle of the documents in every epoch, and keeps the running average of the
    iterates. After each epoch the averaged iterate replaces the returned solution when its
    objective is no worse than the best so far, so the recorded objective never increases.

    Args:
        features: Training documents
        c: Soft-margin parameter, > 0
        epochs: Number of passes
        seed: Seed of the shuffling
        batch_size: Documents per step

    Returns:
        The model
    """
    if c <= 0:
        raise ValueError(f"Soft-margin parameter c must be > 0, got {c}")
    if epochs < 1 or batch_size < 1:
        raise ValueError("epochs and batch_size must be >= 1")
    labels = check_training_data(features.matrix, features.labels)
    matrix = sparse.csr_matrix(features.matrix, dtype=np.float64)
    signs = np.where(labels == POSITIVE_CODE, 1.0, -1.0)
    n, vocab_size = matrix.shape
    regularization = 1.0 / (c * n)

    # last entry is the bias
    current = np.zeros(vocab_size + 1)
    averaged = np.zeros(vocab_size + 1)
    best = averaged.copy()
    best_objective = svm_objective(best[:-1], best[-1], matrix, signs, c)
    history = []
    rng = np.random.default_rng(seed)
    step = 0
    for epoch in range(epochs):
        order = rng.permutation(n)
        for start in range(0, n, batch_size):
            batch = order[start : start + batch_size]
            step += 1
            learning_rate = 1.0 / (regularization * step)
            rows = matrix[batch]
            margins = signs[batch] * (np.asarray(rows @ current[:-1]).ravel() + current[-1])
            violated = margins < 1.0
            current[:-1] *= 1.0 - learning_rate * regularization
            if violated.any():
                scale = learning_rate / len(batch)
                violated_signs = signs[batch][violated]
                current[:-1] += scale * np.asarray(rows[violated].T @ violated_signs).ravel()
                current[-1] += scale * violated_signs.sum()
            averaged += (current - averaged) / step
        objective = svm_objective(averaged[:-1], averaged[-1], matrix, signs, c)
        if objective <= best_objective:
            best = averaged.copy()
            best_objective = objective
        history.append(best_objective)
        logger.debug(
            "SVM epoch %d: objective %.6f (best %.6f)", epoch + 1, objective, best_objective
        )

    return SVMModel(
        weights=best[:-1].copy(),
        bias=float(best[-1]),
        c=float(c),
        epochs=int(epochs),
        seed=int(seed),
        batch_size=int(batch_size),
        objective_history=tuple(history),
    )
