import numpy as np
import pytest

from reddit_sentiment.metrics.classification import (
    ConfusionMatrix,
    common_metrics,
    compute_metrics,
)
from tests.consts_for_tests import N_CLASS_METRICS


def test_confusion_matrix_from_predictions():
    confusion = ConfusionMatrix.from_predictions(
        target=np.array([1, 1, 1, 0, 0]), predictions=np.array([1, 0, 1, 0, 1])
    )
    np.testing.assert_array_equal(confusion.counts, [[1, 1], [1, 2]])
    assert confusion.total == 5
    np.testing.assert_array_equal((confusion + confusion).counts, [[2, 2], [2, 4]])


def test_confusion_matrix_checks():
    with pytest.raises(ValueError):
        ConfusionMatrix.from_predictions(np.array([1, 0]), np.array([1]))
    with pytest.raises(ValueError):
        ConfusionMatrix(np.zeros((3, 3), dtype=int))


def test_compute_metrics():
    # 8 positives, 2 negatives: tp=6, fn=2, fp=1, tn=1
    report = compute_metrics(ConfusionMatrix(np.array([[1, 1], [2, 6]])))
    assert report.precision == pytest.approx((1 / 3, 6 / 7))
    assert report.recall == pytest.approx((1 / 2, 6 / 8))
    f1_negative = 2 * (1 / 3) * (1 / 2) / (1 / 3 + 1 / 2)
    f1_positive = 2 * (6 / 7) * (6 / 8) / (6 / 7 + 6 / 8)
    assert report.f1 == pytest.approx((f1_negative, f1_positive))
    assert report.macro_f1 == pytest.approx((f1_negative + f1_positive) / 2)
    assert report.macro_precision == pytest.approx((1 / 3 + 6 / 7) / 2)
    assert report.accuracy == pytest.approx(0.7)


def test_constant_predictions_give_zero_for_the_missing_class():
    report = compute_metrics(ConfusionMatrix.from_predictions(np.array([1, 1, 0]), np.ones(3)))
    assert report.precision[0] == 0.0
    assert report.recall[0] == 0.0
    assert report.f1[0] == 0.0
    assert report.recall[1] == 1.0


def test_perfect_predictions():
    target = np.array([0, 1, 1, 0])
    report = compute_metrics(ConfusionMatrix.from_predictions(target, target))
    assert report.macro_f1 == 1.0
    assert report.accuracy == 1.0


def test_empty_confusion_matrix():
    with pytest.raises(ValueError):
        compute_metrics(ConfusionMatrix(np.zeros((2, 2), dtype=int)))


def test_common_metrics():
    predictions = np.random.randint(0, 2, size=50)
    target = np.random.randint(0, 2, size=50)
    target[:2] = [0, 1]
    metrics = common_metrics(predictions=predictions, target=target, tag="svm")
    assert len(metrics) == N_CLASS_METRICS
    for key in ["svm/positive/precision", "svm/negative/f1", "svm/macro_f1", "svm/accuracy"]:
        assert key in metrics.keys()
        assert isinstance(metrics[key], float)
        assert 0.0 <= metrics[key] <= 1.0


def _brute_force_class_metrics(target, predictions, code):
    true_positive = sum(1 for t, p in zip(target, predictions) if t == code and p == code)
    predicted = sum(1 for p in predictions if p == code)
    actual = sum(1 for t in target if t == code)
    precision = true_positive / predicted if predicted else 0.0
    recall = true_positive / actual if actual else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return precision, recall, f1


def test_compute_metrics_on_random_matrices():
    rng = np.random.default_rng(11)
    for _ in range(25):
        counts = rng.integers(0, 40, size=(2, 2))
        counts[rng.integers(0, 2), rng.integers(0, 2)] += 1
        target = np.repeat([0, 0, 1, 1], counts.ravel())
        predictions = np.repeat([0, 1, 0, 1], counts.ravel())
        report = compute_metrics(ConfusionMatrix(counts))

        per_class = [_brute_force_class_metrics(target, predictions, code) for code in (0, 1)]
        for code, (precision, recall, f1) in enumerate(per_class):
            assert report.precision[code] == pytest.approx(precision, abs=1e-12)
            assert report.recall[code] == pytest.approx(recall, abs=1e-12)
            assert report.f1[code] == pytest.approx(f1, abs=1e-12)
        assert report.macro_f1 == pytest.approx(
            (per_class[0][2] + per_class[1][2]) / 2, abs=1e-12
        )
        assert report.accuracy == pytest.approx(
            np.mean(target == predictions), abs=1e-12
        )

        swapped = compute_metrics(ConfusionMatrix(counts[::-1, ::-1].copy()))
        assert swapped.precision == pytest.approx(report.precision[::-1], abs=1e-12)
        assert swapped.recall == pytest.approx(report.recall[::-1], abs=1e-12)
        assert swapped.f1 == pytest.approx(report.f1[::-1], abs=1e-12)
        assert swapped.macro_f1 == pytest.approx(report.macro_f1, abs=1e-12)
        assert swapped.accuracy == pytest.approx(report.accuracy, abs=1e-12)
