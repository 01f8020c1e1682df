"""Versioned JSON dumps of trained models"""
import json
import logging
from pathlib import Path

import numpy as np

from reddit_sentiment.classify.naive_bayes import NBModel
from reddit_sentiment.classify.predict import Model
from reddit_sentiment.classify.random_forest import DecisionTree, RFModel
from reddit_sentiment.classify.svm import SVMModel
from reddit_sentiment.classify.train import Algorithm
from reddit_sentiment.exceptions import InputDataError

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
_TREE_ARRAYS = ("feature", "threshold", "left", "right", "counts")


def _header(kind: Algorithm, model: Model, hyperparameters: dict, seed) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "kind": kind.value,
        "vocab_size": model.vocab_size,
        "hyperparameters": hyperparameters,
        "seed": seed,
    }


def model_to_dict(model: Model) -> dict:
    """
    Header plus parameters of a model

    Floats are written with repr precision, so loading gives back the same arrays.
    """
    if isinstance(model, NBModel):
        payload = _header(Algorithm.NB, model, {"alpha": model.smoothing_alpha}, None)
        payload["class_log_priors"] = model.class_log_priors.tolist()
        payload["term_log_likelihoods"] = model.term_log_likelihoods.tolist()
    elif isinstance(model, SVMModel):
        hyperparameters = {"c": model.c, "epochs": model.epochs, "batch_size": model.batch_size}
        payload = _header(Algorithm.SVM, model, hyperparameters, model.seed)
        payload["weights"] = model.weights.tolist()
        payload["bias"] = model.bias
        payload["objective_history"] = list(model.objective_history)
    elif isinstance(model, RFModel):
        hyperparameters = {
            "n_trees": model.n_trees,
            "max_features": model.max_features,
            "bootstrap": model.bootstrap,
            "max_depth": model.max_depth,
        }
        payload = _header(Algorithm.RF, model, hyperparameters, model.seed)
        payload["trees"] = [
            {name: getattr(tree, name).tolist() for name in _TREE_ARRAYS} for tree in model.trees
        ]
    else:
        raise TypeError(f"Not a trained classifier: {type(model).__name__}")
    return payload


def model_from_dict(payload: dict) -> Model:
    """Inverse of model_to_dict"""
    if payload.get("format_version") != FORMAT_VERSION:
        raise InputDataError(f"Unsupported model format version {payload.get('format_version')}")
    kind = Algorithm(payload["kind"])
    hyperparameters = payload["hyperparameters"]
    if kind == Algorithm.NB:
        model = NBModel(
            class_log_priors=np.asarray(payload["class_log_priors"], dtype=np.float64),
            term_log_likelihoods=np.asarray(
                payload["term_log_likelihoods"], dtype=np.float64
            ).reshape(2, -1),
            smoothing_alpha=hyperparameters["alpha"],
        )
    elif kind == Algorithm.SVM:
        model = SVMModel(
            weights=np.asarray(payload["weights"], dtype=np.float64),
            bias=payload["bias"],
            seed=payload["seed"],
            objective_history=tuple(payload["objective_history"]),
            **hyperparameters,
        )
    else:
        trees = tuple(
            DecisionTree(
                feature=np.asarray(tree["feature"], dtype=np.int64),
                threshold=np.asarray(tree["threshold"], dtype=np.float64),
                left=np.asarray(tree["left"], dtype=np.int64),
                right=np.asarray(tree["right"], dtype=np.int64),
                counts=np.asarray(tree["counts"], dtype=np.int64).reshape(-1, 2),
            )
            for tree in payload["trees"]
        )
        model = RFModel(
            trees=trees, seed=payload["seed"], vocab_size=payload["vocab_size"], **hyperparameters
        )
    if model.vocab_size != payload["vocab_size"]:
        raise InputDataError(
            f"Model parameters cover {model.vocab_size} terms "
            f"but the header says {payload['vocab_size']}"
        )
    return model


def save_model(model: Model, path: Path) -> None:
    """Write a model as JSON"""
    Path(path).write_text(json.dumps(model_to_dict(model)), encoding="utf-8")
    logger.info("Saved %s model to %s", type(model).__name__, path)


def load_model(path: Path) -> Model:
    """Read a model written by save_model"""
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise InputDataError(f"Cannot read model {path}: {e}") from e
    try:
        return model_from_dict(payload)
    except (KeyError, TypeError, ValueError) as e:
        raise InputDataError(f"Malformed model {path}: {e}") from e
