"""Mean-polarity scorer"""
from reddit_sentiment.exceptions import LexiconError
from reddit_sentiment.features.tokenize import tokenize
from reddit_sentiment.lexsent.labels import Scorer, SentimentScore
from reddit_sentiment.lexsent.lexicon import PolarityLexicon

NEGATION_SCALAR = -0.5
NEGATION_WINDOW = 2


def score_polarity(
    text: str,
    lexicon: PolarityLexicon,
    negation_scalar: float = NEGATION_SCALAR,
    negation_window: int = NEGATION_WINDOW,
) -> SentimentScore:
    """
    Mean polarity of the lexicon words of a text

    A lexicon word preceded by a negator within negation_window tokens has its polarity
    multiplied by negation_scalar. Texts without lexicon words score 0.

    Args:
        text: Text to score
        lexicon: Polarity lexicon, non-empty
        negation_scalar: Factor for negated words
        negation_window: How many preceding tokens are searched for a negator

    Returns:
        Polarity score in [-1, 1]
    """
    if not lexicon.entries:
        raise LexiconError("Polarity lexicon is empty")
    tokens = tokenize(text)
    polarities = []
    for i, token in enumerate(tokens):
        if token not in lexicon.entries:
            continue
        polarity = lexicon.entries[token]
        if any(t in lexicon.negators for t in tokens[max(0, i - negation_window) : i]):
            polarity *= negation_scalar
        polarities.append(polarity)
    if not polarities:
        return SentimentScore(0.0, Scorer.POLARITY)
    return SentimentScore(sum(polarities) / len(polarities), Scorer.POLARITY)
