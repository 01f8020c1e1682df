import numpy as np
import pytest

from reddit_sentiment.corpus.dump import RawComment
from reddit_sentiment.corpus.filters import (
    CANADA,
    UK,
    LengthBand,
    Message,
    filter_by_length,
    filter_corpus,
    in_date_range,
    is_bot,
    is_covid_related,
    source_of,
    word_count,
)


def _message(mid: str, n_words: int) -> Message:
    body = " ".join(["word"] * n_words)
    return Message(mid, body, n_words, CANADA)


def test_word_count():
    assert word_count("") == 0
    assert word_count("  one\ttwo\nthree  ") == 3


@pytest.mark.parametrize(
    "body, expected",
    [
        ("Got my vaccines today", True),
        ("COVID-19 numbers are up", True),
        ("Lockdown again", True),
        ("booked my second dose", True),
        ("my second, dose", True),
        ("the first shot hurt", True),
        ("a second glance at the dose", False),
        ("nice weather", False),
        ("", False),
    ],
)
def test_is_covid_related(body, expected):
    assert is_covid_related(body) is expected


def test_is_covid_related_needs_keywords():
    with pytest.raises(ValueError):
        is_covid_related("covid", keywords=())


@pytest.mark.parametrize(
    "author, body, expected",
    [
        ("RemindMeBot", "covid", True),
        ("some_BOT", "covid", True),
        ("automoderator", "covid", True),
        ("alice", "*I am a bot*, and this action was performed automatically", True),
        ("alice", "I am a   **bot**", True),
        ("robotics_fan", "covid", False),
        ("alice", "I am a human", False),
    ],
)
def test_is_bot(author, body, expected):
    assert is_bot(author, body) is expected


def test_in_date_range_is_inclusive():
    assert in_date_range(10, 10, 20)
    assert in_date_range(20, 10, 20)
    assert not in_date_range(9, 10, 20)
    assert not in_date_range(21, 10, 20)
    assert in_date_range(5)


def test_source_of():
    assert source_of("Canada") == CANADA
    assert source_of("unitedkingdom") == UK
    assert source_of("ontario") == "ontario"


def test_message_checks_word_count():
    with pytest.raises(ValueError):
        Message("m", "two words", 3, CANADA)


def test_length_band_parse():
    assert LengthBand.parse("11:249") == LengthBand()
    assert str(LengthBand(5, 7)) == "5:7"
    with pytest.raises(ValueError):
        LengthBand.parse("11-249")
    with pytest.raises(ValueError):
        LengthBand(20, 10)


def test_filter_by_length_boundaries():
    messages = [_message(str(n), n) for n in (0, 10, 11, 249, 250)]
    result = filter_by_length(messages, LengthBand(11, 249))
    assert [m.id for m in result.retained] == ["11", "249"]
    assert result.dropped_short == 2
    assert result.dropped_long == 1


def test_filter_by_length_uk_counts():
    # 4218 topic messages, 95 below and 237 above the band
    lengths = [5] * 95 + [300] * 237 + [40] * (4218 - 95 - 237)
    messages = [_message(str(i), n) for i, n in enumerate(lengths)]
    result = filter_by_length(messages)
    assert len(result.retained) == 3886
    assert (result.dropped_short, result.dropped_long) == (95, 237)


def test_filter_corpus_stages():
    records = [
        RawComment("1", "alice", "covid news", 100, "canada"),
        RawComment("2", "bob", "hockey news", 100, "canada"),
        RawComment("3", "AutoModerator", "covid rules", 100, "canada"),
        RawComment("4", "carol", "covid news", 500, "canada"),
    ]
    kept, counts = filter_corpus(records, start_utc=0, end_utc=200)
    assert [r.id for r in kept] == ["1"]
    assert (counts.seen, counts.off_topic, counts.bots, counts.out_of_range, counts.kept) == (
        4,
        1,
        1,
        1,
        1,
    )


def test_filter_by_length_properties_on_random_corpora():
    rng = np.random.default_rng(7)
    messages_by_length = {n: _message(f"len{n}", n) for n in range(401)}
    for _ in range(1000):
        lengths = rng.integers(0, 401, size=rng.integers(0, 31))
        messages = [messages_by_length[int(n)] for n in lengths]
        low = int(rng.integers(0, 200))
        band = LengthBand(low, int(rng.integers(low, 400)))

        result = filter_by_length(messages, band)
        assert len(result.retained) + result.dropped_short + result.dropped_long == len(messages)
        assert result.retained == [m for m in messages if band.contains(m.word_count)]

        again = filter_by_length(result.retained, band)
        assert again.retained == result.retained
        assert again.dropped_short == again.dropped_long == 0

        wider = LengthBand(
            max(0, band.min_words - int(rng.integers(0, 20))),
            band.max_words + int(rng.integers(0, 20)),
        )
        widened = filter_by_length(messages, wider)
        assert len(widened.retained) >= len(result.retained)
        assert {id(m) for m in result.retained} <= {id(m) for m in widened.retained}
