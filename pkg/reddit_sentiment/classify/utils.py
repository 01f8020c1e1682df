"""Checks shared by the classifiers"""
import numpy as np
from scipy import sparse

from reddit_sentiment.features.vectorize import DocVector
from reddit_sentiment.lexsent.labels import NEGATIVE_CODE, POSITIVE_CODE


def check_training_data(matrix: sparse.spmatrix, labels: np.ndarray) -> np.ndarray:
    """
    Check a training set for a binary classifier

    Args:
        matrix: Document vectors, one row per document
        labels: Label code per row

    Returns:
        labels as an int64 array
    """
    labels = np.asarray(labels).astype(np.int64)
    if matrix.shape[0] == 0:
        raise ValueError("Cannot train on an empty matrix")
    if matrix.shape[0] != len(labels):
        raise ValueError(f"{matrix.shape[0]} vectors but {len(labels)} labels")
    if matrix.shape[1] == 0:
        raise ValueError("Cannot train with an empty vocabulary")
    if not np.isin(labels, (NEGATIVE_CODE, POSITIVE_CODE)).all():
        raise ValueError("Labels must be binary codes")
    if len(np.unique(labels)) < 2:
        raise ValueError("Training data must contain both Positive and Negative documents")
    return labels


def check_dimension(n_features: int, vocab_size: int) -> None:
    """Raise when vectors do not match the vocabulary a model was trained on"""
    if n_features != vocab_size:
        raise ValueError(f"Vectors have {n_features} features but the model expects {vocab_size}")


def doc_vector_to_row(vector: DocVector, vocab_size: int) -> sparse.csr_matrix:
    """One-row CSR matrix of a DocVector"""
    indices = np.fromiter(vector.weights.keys(), dtype=np.int64, count=len(vector.weights))
    if len(indices) and (indices.min() < 0 or indices.max() >= vocab_size):
        raise ValueError(f"Vector index out of range for a vocabulary of {vocab_size} terms")
    data = np.fromiter(vector.weights.values(), dtype=np.float64, count=len(vector.weights))
    return sparse.csr_matrix((data, indices, [0, len(indices)]), shape=(1, vocab_size))
