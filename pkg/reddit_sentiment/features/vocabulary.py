"""Vocabulary construction with minimum word frequency pruning"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np
import pandas as pd

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Vocabulary:
    """
    Term index frozen from a set of training documents

    Attributes:
        term_to_index: Dense 0-based index of every retained term, in lexicographic order
        document_frequency: Number of training documents containing each term, by index
        collection_frequency: Total occurrences of each term in the training documents, by index
        n_documents: Number of training documents
        min_word_frequency: Collection frequency threshold used for pruning
    """

    term_to_index: dict[str, int]
    document_frequency: np.ndarray
    collection_frequency: np.ndarray
    n_documents: int
    min_word_frequency: int
    terms: tuple[str, ...] = field(init=False)

    def __post_init__(self):
        terms = [""] * len(self.term_to_index)
        for term, index in self.term_to_index.items():
            terms[index] = term
        object.__setattr__(self, "terms", tuple(terms))

    def __len__(self) -> int:
        return len(self.term_to_index)

    def __contains__(self, term: str) -> bool:
        return term in self.term_to_index

    def index(self, term: str) -> int:
        """Index of a retained term"""
        return self.term_to_index[term]


def build_vocabulary(token_lists: Sequence[Sequence[str]], min_freq: int = 1) -> Vocabulary:
    """
    Build a vocabulary from training documents

    A term is kept when its collection frequency, i.e. its total number of occurrences over all
    documents, is at least min_freq. Indices follow lexicographic term order so that the same
    documents always give the same index.

    Args:
        token_lists: Tokenized training documents
        min_freq: Minimum collection frequency, at least 1

    Returns:
        The vocabulary, which may be empty when min_freq exceeds every frequency
    """
    if len(token_lists) == 0:
        raise ValueError("Cannot build a vocabulary from an empty corpus")
    if min_freq < 1:
        raise ValueError(f"min_freq must be >= 1, got {min_freq}")

    collection = Counter()
    documents = Counter()
    for tokens in token_lists:
        collection.update(tokens)
        documents.update(set(tokens))

    retained = sorted(term for term, count in collection.items() if count >= min_freq)
    term_to_index = {term: index for index, term in enumerate(retained)}
    logger.debug(
        "Vocabulary: %d of %d terms kept with min_freq=%d",
        len(retained),
        len(collection),
        min_freq,
    )
    return Vocabulary(
        term_to_index=term_to_index,
        document_frequency=np.array([documents[t] for t in retained], dtype=np.int64),
        collection_frequency=np.array([collection[t] for t in retained], dtype=np.int64),
        n_documents=len(token_lists),
        min_word_frequency=min_freq,
    )


def dump_vocabulary(vocabulary: Vocabulary, path: Path) -> None:
    """
    Write the vocabulary as TSV: term, index, doc_freq, coll_freq

    Args:
        vocabulary: Vocabulary to write
        path: Output file
    """
    frame = pd.DataFrame(
        {
            "term": list(vocabulary.terms),
            "index": np.arange(len(vocabulary)),
            "doc_freq": vocabulary.document_frequency,
            "coll_freq": vocabulary.collection_frequency,
        }
    )
    frame.to_csv(path, sep="\t", index=False, header=False)
    logger.info("Wrote vocabulary of %d terms to %s", len(vocabulary), path)

