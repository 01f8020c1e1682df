import pytest

from reddit_sentiment.corpus.filters import CANADA, Message
from reddit_sentiment.exceptions import InputDataError
from reddit_sentiment.lexsent.consensus import (
    AgreementStats,
    ConsensusRecord,
    Thresholds,
    agreement_stats,
    binarize,
    consensus,
    label_messages,
    read_labels,
    write_labels,
)
from reddit_sentiment.lexsent.labels import Scorer, SentimentLabel, SentimentScore
from reddit_sentiment.lexsent.lexicon import load_demo_lexicons
from tests.consts_for_tests import CANADA_IN_BAND, UK_ALL, UK_IN_BAND

POS, NEG, NEU = SentimentLabel.POSITIVE, SentimentLabel.NEGATIVE, SentimentLabel.NEUTRAL


@pytest.mark.parametrize(
    "value, expected",
    [(0.05, POS), (0.049, NEU), (-0.049, NEU), (-0.05, NEG), (0.0, NEU)],
)
def test_binarize_valence_defaults(value, expected):
    assert binarize(SentimentScore(value, Scorer.VALENCE)) == expected


def test_binarize_polarity_defaults():
    assert binarize(SentimentScore(0.01, Scorer.POLARITY)) == POS
    assert binarize(SentimentScore(0.0, Scorer.POLARITY)) == NEU
    assert binarize(SentimentScore(-0.01, Scorer.POLARITY)) == NEG


def test_binarize_custom_thresholds():
    thresholds = Thresholds.parse("0.5:-0.5")
    assert binarize(SentimentScore(0.4, Scorer.VALENCE), thresholds) == NEU
    assert str(thresholds) == "0.5:-0.5"
    with pytest.raises(ValueError):
        Thresholds(-0.1, 0.1)
    with pytest.raises(ValueError):
        Thresholds.parse("0.5")


def test_consensus():
    assert consensus(POS, POS) == POS
    assert consensus(NEG, NEG) == NEG
    assert consensus(NEU, NEU) is None
    assert consensus(POS, NEG) is None
    assert consensus(POS, NEU) is None


def test_consensus_record_is_checked():
    with pytest.raises(ValueError):
        ConsensusRecord("m", POS, NEG, POS)
    assert ConsensusRecord.from_labels("m", "negative", "negative").consensus == NEG


def test_agreement_stats():
    records = [
        ConsensusRecord.from_labels("1", POS, POS),
        ConsensusRecord.from_labels("2", NEG, NEG),
        ConsensusRecord.from_labels("3", POS, NEG),
        ConsensusRecord.from_labels("4", NEU, NEU),
    ]
    stats = agreement_stats(records)
    assert (stats.agreed_positive, stats.agreed_negative, stats.inconsistent) == (1, 1, 2)
    assert stats.agreement_pct == 50.0
    with pytest.raises(ValueError):
        agreement_stats([])


@pytest.mark.parametrize(
    "counts, agreement_pct, positive_share",
    [(UK_ALL, 60.95, 37.22), (UK_IN_BAND, 60.37, 35.77), (CANADA_IN_BAND, 61.76, 41.32)],
)
def test_agreement_from_reported_counts(counts, agreement_pct, positive_share):
    stats = AgreementStats.from_counts(*counts)
    assert stats.agreement_pct == pytest.approx(agreement_pct, abs=0.02)
    assert stats.positive_share == pytest.approx(positive_share, abs=0.02)


def test_label_messages():
    valence_lexicon, polarity_lexicon = load_demo_lexicons()
    messages = [
        Message("1", "great vaccine news", 3, CANADA),
        Message("2", "terrible lockdown", 2, CANADA),
        Message("3", "good and bad", 3, CANADA),
        Message("4", "the lockdown", 2, CANADA),
    ]
    records = label_messages(messages, valence_lexicon, polarity_lexicon)
    assert [r.message_id for r in records] == ["1", "2", "3", "4"]
    assert [r.consensus for r in records] == [POS, NEG, None, None]
    assert (records[2].label_a, records[2].label_b) == (POS, NEG)
    assert (records[3].label_a, records[3].label_b) == (NEU, NEU)


def test_write_then_read_labels(tmp_path):
    records = [
        ConsensusRecord.from_labels("1", POS, POS),
        ConsensusRecord.from_labels("2", POS, NEU),
    ]
    path = tmp_path / "labels.csv"
    write_labels(records, path)
    assert path.read_text().splitlines()[0] == "message_id,label_a,label_b,consensus"
    assert read_labels(path) == records


def test_read_labels_missing_columns(tmp_path):
    path = tmp_path / "labels.csv"
    path.write_text("message_id,label_a\n1,positive\n")
    with pytest.raises(InputDataError):
        read_labels(path)
