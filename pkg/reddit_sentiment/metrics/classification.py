"""Confusion matrices and macro-averaged classification metrics"""
from dataclasses import dataclass

import numpy as np

from reddit_sentiment.lexsent.labels import NEGATIVE_CODE, POSITIVE_CODE, SentimentLabel

CLASSES = {NEGATIVE_CODE: SentimentLabel.NEGATIVE, POSITIVE_CODE: SentimentLabel.POSITIVE}


@dataclass(frozen=True)
class ConfusionMatrix:
    """
    Counts of (true label, predicted label) pairs

    Attributes:
        counts: 2x2 integer array, counts[true code, predicted code]
    """

    counts: np.ndarray

    def __post_init__(self):
        if self.counts.shape != (2, 2):
            raise ValueError(f"A binary confusion matrix is 2x2, got {self.counts.shape}")
        if (self.counts < 0).any():
            raise ValueError("Confusion counts must be >= 0")

    @classmethod
    def from_predictions(cls, target: np.ndarray, predictions: np.ndarray) -> "ConfusionMatrix":
        """
        Tally predictions against the truth

        Args:
            target: True label codes
            predictions: Predicted label codes, same length

        Returns:
            The confusion matrix
        """
        target = np.asarray(target, dtype=np.int64)
        predictions = np.asarray(predictions, dtype=np.int64)
        if target.shape != predictions.shape:
            raise ValueError(f"{len(target)} targets but {len(predictions)} predictions")
        counts = np.bincount(2 * target + predictions, minlength=4).reshape(2, 2)
        return cls(counts=counts)

    def __add__(self, other: "ConfusionMatrix") -> "ConfusionMatrix":
        """Cell-wise sum, used to pool folds"""
        return ConfusionMatrix(counts=self.counts + other.counts)

    @property
    def total(self) -> int:
        """Number of predictions counted"""
        return int(self.counts.sum())


@dataclass(frozen=True)
class MetricsReport:
    """
    Per-class and macro metrics; per-class values are indexed by label code

    Macro values are unweighted means over the two classes, and macro_f1 is the mean of the
    per-class F1 scores.
    """

    precision: tuple[float, float]
    recall: tuple[float, float]
    f1: tuple[float, float]
    macro_precision: float
    macro_recall: float
    macro_f1: float
    accuracy: float

    def to_dict(self, tag: str = "") -> dict:
        """Flat metrics dictionary with keys prefixed by tag"""
        prefix = f"{tag}/" if tag else ""
        metrics = {}
        for code, label in CLASSES.items():
            metrics[f"{prefix}{label.value}/precision"] = self.precision[code]
            metrics[f"{prefix}{label.value}/recall"] = self.recall[code]
            metrics[f"{prefix}{label.value}/f1"] = self.f1[code]
        metrics[prefix + "macro_precision"] = self.macro_precision
        metrics[prefix + "macro_recall"] = self.macro_recall
        metrics[prefix + "macro_f1"] = self.macro_f1
        metrics[prefix + "accuracy"] = self.accuracy
        return metrics


def _ratio(numerator: float, denominator: float) -> float:
    return float(numerator / denominator) if denominator else 0.0


def compute_metrics(confusion: ConfusionMatrix) -> MetricsReport:
    """
    Precision, recall, F1 and accuracy of a confusion matrix

    A precision or recall with a zero denominator is 0, and so is F1 when both are 0.

    Args:
        confusion: Confusion matrix with at least one document

    Returns:
        The metrics
    """
    if confusion.total <= 0:
        raise ValueError("Cannot compute metrics of an empty confusion matrix")
    counts = confusion.counts
    precision, recall, f1 = [], [], []
    for code in (NEGATIVE_CODE, POSITIVE_CODE):
        true_positive = counts[code, code]
        p = _ratio(true_positive, counts[:, code].sum())
        r = _ratio(true_positive, counts[code, :].sum())
        precision.append(p)
        recall.append(r)
        f1.append(_ratio(2 * p * r, p + r))
    return MetricsReport(
        precision=tuple(precision),
        recall=tuple(recall),
        f1=tuple(f1),
        macro_precision=float(np.mean(precision)),
        macro_recall=float(np.mean(recall)),
        macro_f1=float(np.mean(f1)),
        accuracy=_ratio(np.trace(counts), confusion.total),
    )


def common_metrics(predictions: np.ndarray, target: np.ndarray, tag: str = "") -> dict:
    """
    Metrics of label code predictions as a flat dictionary

    Args:
        predictions: Predicted label codes
        target: True label codes
        tag: Prefix of the dictionary keys

    Returns:
        Dictionary of metrics
    """
    return compute_metrics(ConfusionMatrix.from_predictions(target, predictions)).to_dict(tag)
