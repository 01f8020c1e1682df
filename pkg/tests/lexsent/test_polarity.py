import pytest

from reddit_sentiment.exceptions import LexiconError
from reddit_sentiment.lexsent.labels import Scorer
from reddit_sentiment.lexsent.lexicon import PolarityLexicon, load_demo_lexicons
from reddit_sentiment.lexsent.polarity import score_polarity

_, LEXICON = load_demo_lexicons()


@pytest.mark.parametrize(
    "text, expected",
    [
        ("good", 0.4),
        ("Good news, bad news", -0.15),
        ("not good", -0.2),
        ("not very good", -0.2),
        ("not a very good", 0.4),
        ("the vaccine appointment", 0.0),
        ("", 0.0),
    ],
)
def test_score_polarity(text, expected):
    score = score_polarity(text, LEXICON)
    assert score.scorer == Scorer.POLARITY
    assert score.value == pytest.approx(expected)


def test_score_polarity_stays_in_range():
    assert -1.0 <= score_polarity("terrible awful horrible", LEXICON).value <= 1.0


def test_empty_lexicon():
    with pytest.raises(LexiconError):
        score_polarity("good", PolarityLexicon(entries={}))


def test_typographic_apostrophe_negates():
    assert score_polarity("don’t good", LEXICON).value == pytest.approx(-0.2)
