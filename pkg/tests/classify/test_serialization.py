import json

import numpy as np
import pytest
from scipy import sparse

from reddit_sentiment.classify.predict import predict_matrix
from reddit_sentiment.classify.serialization import (
    FORMAT_VERSION,
    load_model,
    model_from_dict,
    model_to_dict,
    save_model,
)
from reddit_sentiment.classify.train import Algorithm, ClassifierParams, train_model
from reddit_sentiment.exceptions import InputDataError
from reddit_sentiment.features.vectorize import FeatureMatrix, Representation
from reddit_sentiment.features.vocabulary import build_vocabulary


def _features() -> FeatureMatrix:
    rng = np.random.default_rng(0)
    rows = rng.integers(0, 3, size=(40, 6)).astype(np.float64)
    labels = (rows[:, 0] >= rows[:, 1]).astype(int)
    vocabulary = build_vocabulary([[f"t{i}" for i in range(6)]])
    return FeatureMatrix(sparse.csr_matrix(rows), labels, vocabulary, Representation.BOW)


@pytest.mark.parametrize("algorithm", list(Algorithm))
def test_saved_model_predicts_the_same(tmp_path, algorithm):
    features = _features()
    params = ClassifierParams(svm_epochs=5, rf_n_trees=5, rf_max_depth=4)
    model = train_model(algorithm, features, params, seed=3)
    path = tmp_path / f"{algorithm.value}.json"
    save_model(model, path)

    header = json.loads(path.read_text())
    assert header["format_version"] == FORMAT_VERSION
    assert header["kind"] == algorithm.value
    assert header["vocab_size"] == 6

    loaded = load_model(path)
    assert type(loaded) is type(model)
    codes, scores = predict_matrix(model, features.matrix)
    loaded_codes, loaded_scores = predict_matrix(loaded, features.matrix)
    np.testing.assert_array_equal(codes, loaded_codes)
    np.testing.assert_array_equal(scores, loaded_scores)


def test_model_from_dict_checks_header():
    payload = model_to_dict(train_model(Algorithm.NB, _features()))
    with pytest.raises(InputDataError):
        model_from_dict({**payload, "format_version": FORMAT_VERSION + 1})
    with pytest.raises(InputDataError):
        model_from_dict({**payload, "vocab_size": 7})


def test_load_model_errors(tmp_path):
    with pytest.raises(InputDataError):
        load_model(tmp_path / "missing.json")
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(InputDataError):
        load_model(path)
    path.write_text(json.dumps({"format_version": FORMAT_VERSION, "kind": "svm"}))
    with pytest.raises(InputDataError):
        load_model(path)


def test_model_to_dict_rejects_other_objects():
    with pytest.raises(TypeError):
        model_to_dict(object())
