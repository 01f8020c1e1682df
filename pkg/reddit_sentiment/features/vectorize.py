"""Bag-of-words and TF-IDF document vectors"""
import logging
import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Sequence

import numpy as np
import pandas as pd
from scipy import sparse

from reddit_sentiment.features.vocabulary import Vocabulary
from reddit_sentiment.lexsent.labels import from_codes

logger = logging.getLogger(__name__)


class Representation(str, Enum):
    """Document representation"""

    BOW = "bow"
    TFIDF = "tfidf"


@dataclass(frozen=True)
class DocVector:
    """Sparse document vector, index -> weight"""

    weights: dict[int, float]
    representation: Representation


@dataclass(frozen=True)
class FeatureMatrix:
    """
    Document vectors of a labelled corpus

    Attributes:
        matrix: CSR matrix, one row per document, one column per vocabulary index
        labels: Label code per row (see lexsent.labels.to_codes)
        vocabulary: The vocabulary the columns refer to
        representation: How the weights were computed
    """

    matrix: sparse.csr_matrix
    labels: np.ndarray
    vocabulary: Vocabulary
    representation: Representation

    def __post_init__(self):
        if self.matrix.shape[0] != len(self.labels):
            raise ValueError(
                f"{self.matrix.shape[0]} vectors but {len(self.labels)} labels"
            )


def vectorize_bow(tokens: Sequence[str], vocabulary: Vocabulary) -> DocVector:
    """
    Term counts of one document

    Args:
        tokens: Tokenized document
        vocabulary: Vocabulary to index with; out-of-vocabulary tokens are ignored

    Returns:
        Sparse vector of raw counts
    """
    counts = Counter(
        vocabulary.term_to_index[t] for t in tokens if t in vocabulary.term_to_index
    )
    return DocVector(weights=dict(sorted(counts.items())), representation=Representation.BOW)


def vectorize_tfidf(tokens: Sequence[str], vocabulary: Vocabulary) -> DocVector:
    """
    TF-IDF weights of one document

    tf is the raw count of the term in this document and idf = 1 + ln(n_documents / df),
    with the document frequencies frozen in the vocabulary.

    Args:
        tokens: Tokenized document
        vocabulary: Vocabulary carrying training document frequencies

    Returns:
        Sparse vector of tf x idf weights
    """
    if vocabulary.n_documents <= 0:
        raise ValueError("Vocabulary has no document statistics")
    counts = vectorize_bow(tokens, vocabulary).weights
    weights = {
        index: count
        * (1.0 + math.log(vocabulary.n_documents / vocabulary.document_frequency[index]))
        for index, count in counts.items()
    }
    return DocVector(weights=weights, representation=Representation.TFIDF)


def vectorize_matrix(
    token_lists: Sequence[Sequence[str]],
    vocabulary: Vocabulary,
    representation: Representation = Representation.BOW,
) -> sparse.csr_matrix:
    """
    Vectorize a list of documents into a CSR matrix

    Args:
        token_lists: Tokenized documents
        vocabulary: Vocabulary giving the columns
        representation: BOW or TFIDF

    Returns:
        Matrix of shape (len(token_lists), len(vocabulary))
    """
    representation = Representation(representation)
    vectorizer = vectorize_bow if representation == Representation.BOW else vectorize_tfidf
    indptr = [0]
    indices: list[int] = []
    data: list[float] = []
    for tokens in token_lists:
        weights = vectorizer(tokens, vocabulary).weights
        indices.extend(weights.keys())
        data.extend(weights.values())
        indptr.append(len(indices))
    return sparse.csr_matrix(
        (np.asarray(data, dtype=np.float64), np.asarray(indices, dtype=np.int64), indptr),
        shape=(len(token_lists), len(vocabulary)),
    )


def build_feature_matrix(
    token_lists: Sequence[Sequence[str]],
    labels: np.ndarray,
    vocabulary: Vocabulary,
    representation: Representation = Representation.BOW,
) -> FeatureMatrix:
    """Vectorize labelled documents into a FeatureMatrix"""
    return FeatureMatrix(
        matrix=vectorize_matrix(token_lists, vocabulary, representation),
        labels=np.asarray(labels),
        vocabulary=vocabulary,
        representation=Representation(representation),
    )


def export_matrix(features: FeatureMatrix, matrix_path: Path, labels_path: Path) -> None:
    """
    Write a feature matrix as sparse triplets plus a labels file

    Args:
        features: Matrix to export
        matrix_path: CSV of doc_index,term_index,weight
        labels_path: CSV of doc_index,label
    """
    coo = features.matrix.tocoo()
    order = np.lexsort((coo.col, coo.row))
    pd.DataFrame(
        {"doc_index": coo.row[order], "term_index": coo.col[order], "weight": coo.data[order]}
    ).to_csv(matrix_path, index=False)
    pd.DataFrame(
        {"doc_index": np.arange(len(features.labels)), "label": from_codes(features.labels)}
    ).to_csv(labels_path, index=False)
    logger.info("Exported %d x %d matrix to %s", *features.matrix.shape, matrix_path)
