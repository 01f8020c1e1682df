"""Rule-based valence scorer producing a normalized compound score"""
import math
import string
from dataclasses import dataclass

from reddit_sentiment.exceptions import LexiconError
from reddit_sentiment.features.tokenize import APOSTROPHES
from reddit_sentiment.lexsent.labels import Scorer, SentimentScore
from reddit_sentiment.lexsent.lexicon import DEFAULT_BOOSTER_INCREMENT, ValenceLexicon

_MAX_COMPOUND = math.nextafter(1.0, 0.0)


@dataclass(frozen=True)
class ValenceParams:
    """
    Rule constants of the valence scorer

    Attributes:
        alpha: Normalization constant of compound = s / sqrt(s^2 + alpha)
        booster_increment: Increment of boosters listed without an explicit one
        booster_decay: Weight of a booster at distance 1, 2 and 3 before a sentiment word;
            its length is the look-back window for boosters and negators
        negation_scalar: Factor applied to a sentiment word preceded by a negator
        caps_increment: Emphasis of an ALL-CAPS word in mixed-case text
        exclamation_increment: Emphasis per "!"
        exclamation_cap: Maximum number of "!" counted
        question_increment: Emphasis per "?" when two or three are present
        question_cap: Emphasis for more than three "?"
        contrast_word: Word splitting a text into a down-weighted and an up-weighted part
        contrast_weights: Weights before and after the contrast word
        negate_contractions: Treat any token containing "n't" as a negator
    """

    alpha: float = 15.0
    booster_increment: float = DEFAULT_BOOSTER_INCREMENT
    booster_decay: tuple[float, ...] = (1.0, 0.95, 0.9)
    negation_scalar: float = -0.74
    caps_increment: float = 0.733
    exclamation_increment: float = 0.292
    exclamation_cap: int = 4
    question_increment: float = 0.18
    question_cap: float = 0.96
    contrast_word: str = "but"
    contrast_weights: tuple[float, float] = (0.5, 1.5)
    negate_contractions: bool = True

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError(f"alpha must be > 0, got {self.alpha}")


def _strip_punctuation(token: str) -> str:
    # two characters or fewer left means an emoticon such as ":)"; keep it whole
    stripped = token.strip(string.punctuation)
    return token if len(stripped) <= 2 else stripped


def valence_tokens(text: str) -> list[str]:
    """Whitespace tokens with surrounding punctuation removed, case preserved"""
    return [_strip_punctuation(token) for token in text.translate(APOSTROPHES).split()]


def _cap_differential(tokens: list[str]) -> bool:
    n_caps = sum(1 for token in tokens if token.isupper())
    return 0 < len(tokens) - n_caps < len(tokens)


def _is_negator(word: str, lexicon: ValenceLexicon, params: ValenceParams) -> bool:
    return word in lexicon.negators or (params.negate_contractions and "n't" in word)


def _booster_scalar(
    token: str, valence: float, lexicon: ValenceLexicon, params: ValenceParams, cap_diff: bool
) -> float:
    word = token.lower()
    if word not in lexicon.boosters:
        return 0.0
    scalar = lexicon.boosters[word]
    if valence < 0:
        scalar = -scalar
    if cap_diff and token.isupper():
        scalar += params.caps_increment if valence > 0 else -params.caps_increment
    return scalar


def _token_valence(
    i: int,
    tokens: list[str],
    lowered: list[str],
    lexicon: ValenceLexicon,
    params: ValenceParams,
    cap_diff: bool,
) -> float:
    word = lowered[i]
    if word in lexicon.boosters or word not in lexicon.entries:
        return 0.0
    valence = lexicon.entries[word]
    if cap_diff and tokens[i].isupper():
        valence += params.caps_increment if valence > 0 else -params.caps_increment

    for distance, decay in enumerate(params.booster_decay):
        j = i - distance - 1
        if j < 0:
            break
        # a preceding sentiment word is neither booster nor negator
        if lowered[j] in lexicon.entries:
            continue
        valence += _booster_scalar(tokens[j], valence, lexicon, params, cap_diff) * decay
        if _is_negator(lowered[j], lexicon, params):
            valence *= params.negation_scalar
    return valence


def _punctuation_emphasis(text: str, params: ValenceParams) -> float:
    emphasis = min(text.count("!"), params.exclamation_cap) * params.exclamation_increment
    n_questions = text.count("?")
    if n_questions > 3:
        emphasis += params.question_cap
    elif n_questions > 1:
        emphasis += n_questions * params.question_increment
    return emphasis


def compound_valence(valences: list[float], text: str, params: ValenceParams) -> float:
    """
    Normalize a list of adjusted token valences into a compound score

    Args:
        valences: Adjusted valence of every token, 0 for non-sentiment tokens
        text: The scored text, for punctuation emphasis
        params: Rule constants

    Returns:
        Compound score strictly inside (-1, 1)
    """
    total = sum(valences)
    emphasis = _punctuation_emphasis(text, params)
    if total > 0:
        total += emphasis
    elif total < 0:
        total -= emphasis
    compound = total / math.sqrt(total * total + params.alpha)
    return min(max(compound, -_MAX_COMPOUND), _MAX_COMPOUND)


def score_valence(
    text: str, lexicon: ValenceLexicon, params: ValenceParams = ValenceParams()
) -> SentimentScore:
    """
    Compound valence score of a text

    Each lexicon word contributes its valence, adjusted in turn by ALL-CAPS emphasis, boosters
    and negators among the preceding words, and the contrast-word reweighting. The adjusted
    valences are summed, exclamation and question mark emphasis is added in the direction of
    the sum, and the result is normalized to (-1, 1).

    Args:
        text: Text to score
        lexicon: Valence lexicon, non-empty
        params: Rule constants

    Returns:
        Valence score
    """
    if not lexicon.entries:
        raise LexiconError("Valence lexicon is empty")
    tokens = valence_tokens(text)
    if not tokens:
        return SentimentScore(0.0, Scorer.VALENCE)

    lowered = [token.lower() for token in tokens]
    cap_diff = _cap_differential(tokens)
    valences = [
        _token_valence(i, tokens, lowered, lexicon, params, cap_diff) for i in range(len(tokens))
    ]

    if params.contrast_word in lowered:
        pivot = lowered.index(params.contrast_word)
        before, after = params.contrast_weights
        valences = [
            v * before if k < pivot else v * after if k > pivot else v
            for k, v in enumerate(valences)
        ]
    return SentimentScore(compound_valence(valences, text, params), Scorer.VALENCE)
