"""Multinomial Naive Bayes"""
import logging
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from reddit_sentiment.classify.utils import check_dimension, check_training_data
from reddit_sentiment.features.vectorize import FeatureMatrix
from reddit_sentiment.lexsent.labels import NEGATIVE_CODE, POSITIVE_CODE

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NBModel:
    """
    Trained multinomial Naive Bayes model

    Rows of both arrays are indexed by label code.

    Attributes:
        class_log_priors: Log prior of each class, shape (2,)
        term_log_likelihoods: Log likelihood of each term given the class, shape (2, vocab size)
        smoothing_alpha: Additive smoothing used in training
    """

    class_log_priors: np.ndarray
    term_log_likelihoods: np.ndarray
    smoothing_alpha: float

    @property
    def vocab_size(self) -> int:
        """Number of vocabulary terms the model was trained on"""
        return self.term_log_likelihoods.shape[1]

    def joint_log_likelihood(self, matrix: sparse.spmatrix) -> np.ndarray:
        """log prior + sum of tf x log likelihood, shape (n documents, 2)"""
        check_dimension(matrix.shape[1], self.vocab_size)
        return np.asarray(matrix @ self.term_log_likelihoods.T) + self.class_log_priors

    def decision_function(self, matrix: sparse.spmatrix) -> np.ndarray:
        """Log-odds of Positive against Negative"""
        joint = self.joint_log_likelihood(matrix)
        return joint[:, POSITIVE_CODE] - joint[:, NEGATIVE_CODE]


def train_nb(features: FeatureMatrix, alpha: float = 1.0) -> NBModel:
    """
    Train multinomial Naive Bayes

    The likelihood of term t in class c is
    (weight of t in class-c documents + alpha) / (total class-c weight + alpha * |vocab|).

    Args:
        features: Training documents
        alpha: Additive smoothing, > 0

    Returns:
        The model
    """
    if alpha <= 0:
        raise ValueError(f"alpha must be > 0, got {alpha}")
    labels = check_training_data(features.matrix, features.labels)
    class_counts = np.bincount(labels, minlength=2)
    term_mass = np.vstack(
        [np.asarray(features.matrix[labels == code].sum(axis=0)).ravel() for code in range(2)]
    )
    smoothed = term_mass + alpha
    log_likelihoods = np.log(smoothed) - np.log(smoothed.sum(axis=1, keepdims=True))
    logger.debug("Trained NB on %d documents, %d terms", len(labels), features.matrix.shape[1])
    return NBModel(
        class_log_priors=np.log(class_counts / class_counts.sum()),
        term_log_likelihoods=log_likelihoods,
        smoothing_alpha=float(alpha),
    )
