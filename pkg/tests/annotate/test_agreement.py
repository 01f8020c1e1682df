import pytest

from reddit_sentiment.annotate.agreement import (
    AgreementReport,
    format_agreement_table,
    inter_annotator_agreement,
    restrict_to_band,
    validity_report,
)
from reddit_sentiment.annotate.session import AnnotationRecord
from reddit_sentiment.corpus.filters import CANADA, LengthBand, Message
from reddit_sentiment.exceptions import CoverageError, InputDataError
from reddit_sentiment.lexsent.labels import SentimentLabel
from tests.consts_for_tests import (
    IN_BAND_VALIDITY_CANADA,
    IN_BAND_VALIDITY_UK,
    NEGATIVE_VALIDITY_CANADA,
    NEGATIVE_VALIDITY_UK,
    UNLABELLED_CANADA,
    UNLABELLED_UK,
)

POS, NEG = SentimentLabel.POSITIVE, SentimentLabel.NEGATIVE


def _records(both_positive: int, both_negative: int, group_size: int):
    """Two annotators' records with the given joint counts; the rest disagree"""
    pairs = []
    for i in range(group_size):
        if i < both_positive:
            pairs.append((POS, POS))
        elif i < both_positive + both_negative:
            pairs.append((NEG, NEG))
        else:
            pairs.append((POS, NEG) if i % 2 else (NEG, POS))
    labels_a, labels_b = zip(*pairs)
    records_a = [AnnotationRecord("t", f"m{i}", "a", label) for i, label in enumerate(labels_a)]
    records_b = [AnnotationRecord("t", f"m{i}", "b", label) for i, label in enumerate(labels_b)]
    return records_a, records_b


@pytest.mark.parametrize(
    "table",
    [
        UNLABELLED_CANADA,
        UNLABELLED_UK,
        NEGATIVE_VALIDITY_CANADA,
        NEGATIVE_VALIDITY_UK,
        IN_BAND_VALIDITY_CANADA,
        IN_BAND_VALIDITY_UK,
    ],
)
def test_agreement_from_reported_counts(table):
    both_positive, both_negative, group_size, agreement = table
    report = inter_annotator_agreement(*_records(both_positive, both_negative, group_size))
    assert report.group_size == group_size
    assert (report.both_positive, report.both_negative) == (both_positive, both_negative)
    assert report.agreement == pytest.approx(agreement, abs=0.01)


def test_agreement_is_symmetric_and_order_free():
    records_a, records_b = _records(5, 14, 30)
    forward = inter_annotator_agreement(records_a, records_b)
    assert inter_annotator_agreement(records_b, records_a) == forward
    assert inter_annotator_agreement(records_a[::-1], records_b) == forward


def test_agreement_bounds():
    records_a, _ = _records(3, 2, 5)
    assert inter_annotator_agreement(records_a, records_a).agreement == 1.0
    flipped = [
        AnnotationRecord("t", r.message_id, "b", NEG if r.label == POS else POS)
        for r in records_a
    ]
    assert inter_annotator_agreement(records_a, flipped).agreement == 0.0


def test_agreement_coverage():
    records_a, records_b = _records(2, 2, 5)
    with pytest.raises(CoverageError) as error:
        inter_annotator_agreement(records_a, records_b[:-1])
    assert error.value.only_first == {"m4"}
    with pytest.raises(InputDataError):
        inter_annotator_agreement(records_a + records_a[:1], records_b)


def test_agreement_report_checks_counts():
    with pytest.raises(ValueError):
        AgreementReport(10, 5, 5, 1)
    with pytest.raises(ValueError):
        AgreementReport(0, 0, 0, 0)


def test_validity_report():
    # 50 messages all labelled negative by the tools; annotators agree on 2 positive, 43 negative
    records_a, records_b = _records(*NEGATIVE_VALIDITY_CANADA[:3])
    tool_labels = {r.message_id: NEG for r in records_a}
    report = validity_report(records_a, records_b, tool_labels)
    assert report.confirmed == 43
    assert report.contradicted == 2
    assert report.agreement.agreement == pytest.approx(0.90)
    assert report.to_dict("canada")["canada/confirmed"] == 43

    with pytest.raises(CoverageError):
        validity_report(records_a, records_b, {"m0": NEG})


def test_restrict_to_band():
    records_a, _ = _records(1, 1, 3)
    messages = {
        "m0": Message("m0", " ".join(["w"] * 5), 5, CANADA),
        "m1": Message("m1", " ".join(["w"] * 20), 20, CANADA),
        "m2": Message("m2", " ".join(["w"] * 300), 300, CANADA),
    }
    kept = restrict_to_band(records_a, messages, LengthBand())
    assert [r.message_id for r in kept] == ["m1"]
    with pytest.raises(InputDataError):
        restrict_to_band(records_a, {"m0": messages["m0"]}, LengthBand())


def test_format_agreement_table():
    canada = inter_annotator_agreement(*_records(*UNLABELLED_CANADA[:3]))
    records_a, records_b = _records(*NEGATIVE_VALIDITY_UK[:3])
    uk = validity_report(records_a, records_b, {r.message_id: NEG for r in records_a})
    table = format_agreement_table({"canada": canada, "uk": uk})
    lines = table.splitlines()
    assert "canada" in lines[0] and "uk" in lines[0]
    assert [line.split()[0] for line in lines[1:]] == [
        "Messages",
        "Both",
        "Both",
        "Disagreed",
        "Agreement",
        "Confirm",
        "Contradict",
    ]
    assert "0.633" in table
    assert "0.920" in table
