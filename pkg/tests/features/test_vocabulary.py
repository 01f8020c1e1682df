import numpy as np
import pandas as pd
import pytest

from reddit_sentiment.features.vocabulary import build_vocabulary, dump_vocabulary

DOCS = [["covid", "bad", "bad"], ["covid", "good"], ["vaccine", "good", "covid"]]


def test_build_vocabulary_orders_terms():
    vocabulary = build_vocabulary(DOCS)
    assert vocabulary.terms == ("bad", "covid", "good", "vaccine")
    assert vocabulary.index("good") == 2
    assert "vaccine" in vocabulary
    np.testing.assert_array_equal(vocabulary.document_frequency, [1, 3, 2, 1])
    np.testing.assert_array_equal(vocabulary.collection_frequency, [2, 3, 2, 1])
    assert vocabulary.n_documents == 3


def test_min_freq_uses_collection_frequency():
    # "bad" occurs twice in one document and survives min_freq=2
    vocabulary = build_vocabulary(DOCS, min_freq=2)
    assert vocabulary.terms == ("bad", "covid", "good")
    assert vocabulary.min_word_frequency == 2


def test_min_freq_is_monotone():
    sizes = [len(build_vocabulary(DOCS, min_freq=k)) for k in range(1, 6)]
    assert sizes == sorted(sizes, reverse=True)
    assert sizes[-1] == 0


def test_build_vocabulary_rejects():
    with pytest.raises(ValueError):
        build_vocabulary([])
    with pytest.raises(ValueError):
        build_vocabulary(DOCS, min_freq=0)


def test_dump_vocabulary(tmp_path):
    path = tmp_path / "vocabulary.tsv"
    dump_vocabulary(build_vocabulary(DOCS), path)
    frame = pd.read_csv(path, sep="\t", header=None)
    assert frame[0].tolist() == ["bad", "covid", "good", "vaccine"]
    assert frame[1].tolist() == [0, 1, 2, 3]
    assert frame[2].tolist() == [1, 3, 2, 1]
    assert frame[3].tolist() == [2, 3, 2, 1]
