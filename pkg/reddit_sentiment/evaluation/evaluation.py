""" Cross-validation and the minimum word frequency grid search """
import logging
from dataclasses import dataclass, fields
from enum import Enum
from typing import Callable, Optional, Sequence, Union

import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from tqdm import tqdm

from reddit_sentiment.baselines.simple import majority_baseline
from reddit_sentiment.classify.predict import predict_matrix
from reddit_sentiment.classify.train import Algorithm, ClassifierParams, train_model
from reddit_sentiment.evaluation.folds import CVPlan
from reddit_sentiment.exceptions import EmptyVocabularyError, PipelineError
from reddit_sentiment.features.vectorize import FeatureMatrix, Representation, build_feature_matrix
from reddit_sentiment.features.vocabulary import build_vocabulary
from reddit_sentiment.metrics.classification import ConfusionMatrix, MetricsReport, compute_metrics
from reddit_sentiment.seeds import derive_seed

logger = logging.getLogger(__name__)

# (train features, test features) -> predicted label codes of the test rows
ClassifierFn = Callable[[FeatureMatrix, FeatureMatrix], np.ndarray]

MIN_FREQ_RANGE = range(1, 11)
STATUS_OK = "ok"
STATUS_BASELINE = "baseline"
BASELINE_NAME = "majority_baseline"
GRID_COLUMNS = [
    "dataset",
    "algorithm",
    "representation",
    "min_freq",
    "precision",
    "recall",
    "f1",
    "accuracy",
    "status",
    "best",
]


class Averaging(str, Enum):
    """How fold results are combined"""

    POOLED = "pooled"
    FOLD_MEAN = "fold_mean"


class VocabularyScope(str, Enum):
    """Documents the vocabulary and document frequencies are computed on"""

    FOLD = "fold"
    GLOBAL = "global"


def average_reports(reports: Sequence[MetricsReport]) -> MetricsReport:
    """Field-wise mean of several reports"""
    averaged = {}
    for field in fields(MetricsReport):
        values = np.array([getattr(r, field.name) for r in reports], dtype=np.float64)
        mean = values.mean(axis=0)
        averaged[field.name] = tuple(mean.tolist()) if mean.ndim else float(mean)
    return MetricsReport(**averaged)


def algorithm_name(algorithm: Union[Algorithm, str, ClassifierFn]) -> str:
    """Name of an algorithm or classifier function in reports and seed labels"""
    if callable(algorithm):
        return getattr(algorithm, "__name__", "custom")
    return Algorithm(algorithm).value


def _model_classifier(
    algorithm: Algorithm, params: ClassifierParams, seed: int, n_jobs: int
) -> ClassifierFn:
    def classify(train: FeatureMatrix, test: FeatureMatrix) -> np.ndarray:
        model = train_model(algorithm, train, params, seed=seed, n_jobs=n_jobs)
        return predict_matrix(model, test.matrix)[0]

    return classify


def cross_validate(
    token_lists: Sequence[Sequence[str]],
    labels: np.ndarray,
    algorithm: Union[Algorithm, str, ClassifierFn],
    representation: Representation,
    min_freq: int,
    cv: CVPlan,
    params: ClassifierParams = ClassifierParams(),
    seed: int = 0,
    averaging: Averaging = Averaging.POOLED,
    vocabulary_scope: VocabularyScope = VocabularyScope.FOLD,
    n_jobs: int = 1,
) -> MetricsReport:
    """
    k-fold cross-validation of one configuration

    For every fold the vocabulary and document frequencies are built on the training folds only
    (unless vocabulary_scope is GLOBAL), both splits are vectorized, the classifier is trained
    and the held-out fold predicted. By default all held-out predictions are pooled into one
    confusion matrix.

    Args:
        token_lists: Tokenized consensus-labelled documents
        labels: Label code per document
        algorithm: Classifier to train, or a function mapping (train, test) to predictions
        representation: BOW or TFIDF
        min_freq: Minimum collection frequency of vocabulary terms
        cv: Fold plan over the documents
        params: Classifier hyperparameters
        seed: Master seed; each fold trains with a seed derived from it
        averaging: Pool predictions, or average per-fold metrics
        vocabulary_scope: Build the vocabulary per training split, or once on all documents
        n_jobs: Parallel tree growth of the forest

    Returns:
        The metrics
    """
    labels = np.asarray(labels)
    if len(cv) != len(token_lists) or len(labels) != len(token_lists):
        raise ValueError(
            f"{len(token_lists)} documents, {len(labels)} labels and a plan over {len(cv)}"
        )
    representation = Representation(representation)
    averaging = Averaging(averaging)
    vocabulary_scope = VocabularyScope(vocabulary_scope)

    global_vocabulary = None
    if vocabulary_scope == VocabularyScope.GLOBAL:
        global_vocabulary = build_vocabulary(token_lists, min_freq)
        if len(global_vocabulary) == 0:
            raise EmptyVocabularyError(min_freq)

    pooled = ConfusionMatrix(counts=np.zeros((2, 2), dtype=np.int64))
    fold_reports = []
    for fold, train_index, test_index in cv.splits():
        train_tokens = [token_lists[i] for i in train_index]
        test_tokens = [token_lists[i] for i in test_index]
        if global_vocabulary is not None:
            vocabulary = global_vocabulary
        else:
            vocabulary = build_vocabulary(train_tokens, min_freq)
        if len(vocabulary) == 0:
            raise EmptyVocabularyError(min_freq)
        train = build_feature_matrix(train_tokens, labels[train_index], vocabulary, representation)
        test = build_feature_matrix(test_tokens, labels[test_index], vocabulary, representation)

        if callable(algorithm):
            classify = algorithm
        else:
            fold_seed = derive_seed(seed, f"{algorithm_name(algorithm)}/fold{fold}")
            classify = _model_classifier(Algorithm(algorithm), params, fold_seed, n_jobs)
        confusion = ConfusionMatrix.from_predictions(labels[test_index], classify(train, test))
        pooled = pooled + confusion
        if averaging == Averaging.FOLD_MEAN:
            fold_reports.append(compute_metrics(confusion))

    if averaging == Averaging.FOLD_MEAN:
        return average_reports(fold_reports)
    return compute_metrics(pooled)


@dataclass(frozen=True)
class GridRow:
    """
    One grid cell

    Attributes:
        algorithm: Algorithm name
        representation: Representation name, empty for baselines
        min_freq: Minimum word frequency, 0 for baselines
        report: Metrics, None when the cell was skipped
        status: "ok", "baseline" or "skipped: <reason>"
    """

    algorithm: str
    representation: str
    min_freq: int
    report: Optional[MetricsReport]
    status: str = STATUS_OK


@dataclass(frozen=True)
class GridResult:
    """All grid cells in evaluation order plus the best row index of every algorithm"""

    rows: tuple[GridRow, ...]
    best_per_algorithm: dict[str, int]

    def best_rows(self) -> dict[str, GridRow]:
        """Best grid row per algorithm"""
        return {algorithm: self.rows[i] for algorithm, i in self.best_per_algorithm.items()}

    def to_frame(self, dataset: str = "") -> pd.DataFrame:
        """Grid report with macro metrics; skipped cells have empty metrics"""
        best = set(self.best_per_algorithm.values())
        records = []
        for index, row in enumerate(self.rows):
            report = row.report
            records.append(
                (
                    dataset,
                    row.algorithm,
                    row.representation,
                    row.min_freq,
                    report.macro_precision if report else np.nan,
                    report.macro_recall if report else np.nan,
                    report.macro_f1 if report else np.nan,
                    report.accuracy if report else np.nan,
                    row.status,
                    index in best,
                )
            )
        return pd.DataFrame(records, columns=GRID_COLUMNS)


def select_best(rows: Sequence[GridRow]) -> dict[str, int]:
    """
    Index of the best evaluated row of every algorithm

    Highest macro F1 wins; ties go to the smaller min_freq, then to the earlier row.
    """
    best: dict[str, tuple] = {}
    for index, row in enumerate(rows):
        if row.status != STATUS_OK:
            continue
        key = (-row.report.macro_f1, row.min_freq, index)
        if row.algorithm not in best or key < best[row.algorithm]:
            best[row.algorithm] = key
    return {algorithm: key[2] for algorithm, key in best.items()}


def _grid_cell(
    token_lists, labels, algorithm, representation, min_freq, cv, params, seed, averaging, scope
) -> GridRow:
    name = algorithm_name(algorithm)
    try:
        report = cross_validate(
            token_lists,
            labels,
            algorithm,
            representation,
            min_freq,
            cv,
            params=params,
            seed=seed,
            averaging=averaging,
            vocabulary_scope=scope,
        )
    except (PipelineError, ValueError) as e:
        logger.warning("Skipping %s/%s/min_freq=%d: %s", name, representation.value, min_freq, e)
        return GridRow(name, representation.value, min_freq, None, f"skipped: {e}")
    return GridRow(name, representation.value, min_freq, report)


def evaluate_baseline(labels: np.ndarray, cv: CVPlan) -> GridRow:
    """Pooled cross-validated metrics of predicting the training majority label"""
    labels = np.asarray(labels)
    confusion = ConfusionMatrix(counts=np.zeros((2, 2), dtype=np.int64))
    for _, train_index, test_index in cv.splits():
        predictions = majority_baseline(labels[train_index], len(test_index))
        confusion = confusion + ConfusionMatrix.from_predictions(labels[test_index], predictions)
    return GridRow(BASELINE_NAME, "", 0, compute_metrics(confusion), STATUS_BASELINE)


def grid_search(
    token_lists: Sequence[Sequence[str]],
    labels: np.ndarray,
    cv: CVPlan,
    algorithms: Sequence[Union[Algorithm, ClassifierFn]] = tuple(Algorithm),
    representations: Sequence[Representation] = tuple(Representation),
    min_freq_range: Sequence[int] = MIN_FREQ_RANGE,
    params: ClassifierParams = ClassifierParams(),
    seed: int = 0,
    averaging: Averaging = Averaging.POOLED,
    vocabulary_scope: VocabularyScope = VocabularyScope.FOLD,
    include_baseline: bool = True,
    n_jobs: int = 1,
    progress: bool = False,
) -> GridResult:
    """
    Cross-validate every (algorithm, representation, min_freq) cell

    Cells run in parallel and are collected in grid order, so the result does not depend on
    n_jobs. A cell that fails (e.g. an empty vocabulary) is recorded as skipped.

    Args:
        token_lists: Tokenized consensus-labelled documents
        labels: Label code per document
        cv: Fold plan
        algorithms: Algorithms, or classifier functions, to evaluate
        representations: Representations to evaluate
        min_freq_range: Minimum word frequencies to evaluate
        params: Classifier hyperparameters
        seed: Master seed
        averaging: See cross_validate
        vocabulary_scope: See cross_validate
        include_baseline: Append the majority baseline row
        n_jobs: Cells evaluated in parallel
        progress: Show a progress bar

    Returns:
        All rows and the best row of every algorithm
    """
    algorithms = [a if callable(a) else Algorithm(a) for a in algorithms]
    representations = [Representation(r) for r in representations]
    cells = [
        (algorithm, representation, int(min_freq))
        for algorithm in algorithms
        for representation in representations
        for min_freq in min_freq_range
    ]
    rows = Parallel(n_jobs=n_jobs)(
        delayed(_grid_cell)(
            token_lists,
            labels,
            algorithm,
            representation,
            min_freq,
            cv,
            params,
            seed,
            averaging,
            vocabulary_scope,
        )
        for algorithm, representation, min_freq in tqdm(cells, disable=not progress, desc="grid")
    )
    if include_baseline:
        rows.append(evaluate_baseline(labels, cv))
    skipped = sum(1 for r in rows if r.status.startswith("skipped"))
    logger.info("Grid of %d cells evaluated, %d skipped", len(cells), skipped)
    return GridResult(rows=tuple(rows), best_per_algorithm=select_best(rows))
