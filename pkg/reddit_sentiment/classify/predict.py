"""Prediction with any trained classifier"""
from dataclasses import dataclass
from functools import singledispatch
from typing import Union

import numpy as np
from scipy import sparse

from reddit_sentiment.classify.naive_bayes import NBModel
from reddit_sentiment.classify.random_forest import RFModel
from reddit_sentiment.classify.svm import SVMModel
from reddit_sentiment.classify.utils import doc_vector_to_row
from reddit_sentiment.features.vectorize import DocVector
from reddit_sentiment.lexsent.labels import NEGATIVE_CODE, POSITIVE_CODE, SentimentLabel

Model = Union[NBModel, SVMModel, RFModel]


@dataclass(frozen=True)
class Prediction:
    """
    Predicted label of one document

    score is the log-odds for Naive Bayes, the margin for the SVM and the fraction of Positive
    votes for the random forest.
    """

    label: SentimentLabel
    score: float


@singledispatch
def decision_scores(model, matrix: sparse.spmatrix) -> np.ndarray:
    """Score of every row; Positive iff the score is above the model's cut-off"""
    raise TypeError(f"Not a trained classifier: {type(model).__name__}")


@decision_scores.register
def _(model: NBModel, matrix: sparse.spmatrix) -> np.ndarray:
    return model.decision_function(matrix)


@decision_scores.register
def _(model: SVMModel, matrix: sparse.spmatrix) -> np.ndarray:
    return model.decision_function(matrix)


@decision_scores.register
def _(model: RFModel, matrix: sparse.spmatrix) -> np.ndarray:
    return model.positive_vote_fraction(matrix)


def _cutoff(model: Model) -> float:
    # a tied vote or an exact zero score is Negative
    return 0.5 if isinstance(model, RFModel) else 0.0


def predict_matrix(model: Model, matrix: sparse.spmatrix) -> tuple[np.ndarray, np.ndarray]:
    """
    Predict every row of a matrix

    Args:
        model: Trained classifier
        matrix: Document vectors over the model's vocabulary

    Returns:
        (label codes, scores)
    """
    scores = decision_scores(model, matrix)
    codes = np.where(scores > _cutoff(model), POSITIVE_CODE, NEGATIVE_CODE).astype(np.int8)
    return codes, scores


def predict(model: Model, vector: DocVector) -> Prediction:
    """Predict one document"""
    codes, scores = predict_matrix(model, doc_vector_to_row(vector, model.vocab_size))
    label = SentimentLabel.POSITIVE if codes[0] == POSITIVE_CODE else SentimentLabel.NEGATIVE
    return Prediction(label=label, score=float(scores[0]))
