import pytest

from reddit_sentiment.corpus.filters import Message, filter_by_length, filter_corpus
from reddit_sentiment.corpus.synthetic import make_planted_corpus
from reddit_sentiment.lexsent.consensus import agreement_stats, label_messages
from reddit_sentiment.lexsent.lexicon import load_demo_lexicons


def test_make_planted_corpus_is_seeded():
    assert make_planted_corpus(50, seed=3) == make_planted_corpus(50, seed=3)
    assert make_planted_corpus(50, seed=3) != make_planted_corpus(50, seed=4)


def test_make_planted_corpus_filters():
    corpus = make_planted_corpus(200, seed=1, n_off_topic=10, n_bots=4)
    assert len(corpus) == 214
    assert len({c.id for c in corpus}) == 214
    kept, counts = filter_corpus(corpus)
    assert len(kept) == 200
    assert (counts.off_topic, counts.bots) == (10, 4)

    messages = [Message.from_comment(c) for c in kept]
    result = filter_by_length(messages)
    assert result.dropped_short == 10
    assert result.dropped_long == 10
    assert len(result.retained) == 180


def test_planted_signal_separates_outliers():
    valence_lexicon, polarity_lexicon = load_demo_lexicons()
    kept, _ = filter_corpus(make_planted_corpus(200, seed=2))
    messages = [Message.from_comment(c) for c in kept]
    in_band = filter_by_length(messages).retained

    everything = agreement_stats(label_messages(messages, valence_lexicon, polarity_lexicon))
    banded = agreement_stats(label_messages(in_band, valence_lexicon, polarity_lexicon))
    assert everything.agreement_pct == pytest.approx(90.0)
    assert banded.agreement_pct == pytest.approx(100.0)
    assert banded.agreed_positive > 0
    assert banded.agreed_negative > 0


def test_make_planted_corpus_checks_band():
    with pytest.raises(ValueError):
        make_planted_corpus(10, min_length=5)
