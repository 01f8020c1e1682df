"""Training any of the classifiers from one set of hyperparameters"""
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Optional

from reddit_sentiment.classify.naive_bayes import train_nb
from reddit_sentiment.classify.predict import Model
from reddit_sentiment.classify.random_forest import train_rf
from reddit_sentiment.classify.svm import train_svm
from reddit_sentiment.features.vectorize import FeatureMatrix


class Algorithm(str, Enum):
    """Classification algorithm"""

    NB = "nb"
    SVM = "svm"
    RF = "rf"


@dataclass(frozen=True)
class ClassifierParams:
    """Hyperparameters of all three classifiers"""

    nb_alpha: float = 1.0
    svm_c: float = 0.3
    svm_epochs: int = 20
    svm_batch_size: int = 32
    rf_n_trees: int = 100
    rf_max_features: Optional[int] = None
    rf_max_depth: Optional[int] = None
    rf_bootstrap: bool = True

    def for_algorithm(self, algorithm: Algorithm) -> dict:
        """The hyperparameters one algorithm uses, without their prefix"""
        prefix = f"{Algorithm(algorithm).value}_"
        return {k[len(prefix):]: v for k, v in asdict(self).items() if k.startswith(prefix)}


def train_model(
    algorithm: Algorithm,
    features: FeatureMatrix,
    params: ClassifierParams = ClassifierParams(),
    seed: int = 0,
    n_jobs: int = 1,
) -> Model:
    """
    Train one classifier

    Args:
        algorithm: Which classifier
        features: Training documents
        params: Hyperparameters
        seed: Seed of the SVM shuffling or the forest; Naive Bayes ignores it
        n_jobs: Parallel tree growth of the forest

    Returns:
        The trained model
    """
    algorithm = Algorithm(algorithm)
    if algorithm == Algorithm.NB:
        return train_nb(features, alpha=params.nb_alpha)
    if algorithm == Algorithm.SVM:
        return train_svm(
            features,
            c=params.svm_c,
            epochs=params.svm_epochs,
            seed=seed,
            batch_size=params.svm_batch_size,
        )
    return train_rf(
        features,
        n_trees=params.rf_n_trees,
        max_features=params.rf_max_features,
        seed=seed,
        bootstrap=params.rf_bootstrap,
        max_depth=params.rf_max_depth,
        n_jobs=n_jobs,
    )
