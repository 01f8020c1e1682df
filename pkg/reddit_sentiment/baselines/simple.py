""" Simple baselines to compare the classifiers against """
import numpy as np

from reddit_sentiment.lexsent.labels import NEGATIVE_CODE, POSITIVE_CODE


def constant_baseline(n_documents: int, code: int = POSITIVE_CODE) -> np.ndarray:
    """
    Predict the same label for every document

    Args:
        n_documents: Number of documents to predict
        code: Label code to predict

    Returns:
        Array of label codes
    """
    if code not in (NEGATIVE_CODE, POSITIVE_CODE):
        raise ValueError(f"Not a label code: {code}")
    return np.full(n_documents, code, dtype=np.int8)


def majority_baseline(train_labels: np.ndarray, n_documents: int) -> np.ndarray:
    """
    Predict the most frequent training label for every document

    Args:
        train_labels: Label codes of the training documents
        n_documents: Number of documents to predict

    Returns:
        Array of label codes; a tie predicts Negative
    """
    counts = np.bincount(np.asarray(train_labels, dtype=np.int64), minlength=2)
    code = POSITIVE_CODE if counts[POSITIVE_CODE] > counts[NEGATIVE_CODE] else NEGATIVE_CODE
    return constant_baseline(n_documents, code)
