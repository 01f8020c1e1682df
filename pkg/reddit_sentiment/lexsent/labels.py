"""Sentiment labels and their integer codes"""
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

import numpy as np

NEGATIVE_CODE = 0
POSITIVE_CODE = 1


class SentimentLabel(str, Enum):
    """Sentiment of a message. Neutral is only produced by the automatic scorers"""

    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"

    @classmethod
    def parse(cls, value: str) -> "SentimentLabel":
        """Parse a label from its name or first letter, case-insensitive"""
        text = str(value).strip().lower()
        for label in cls:
            if text in (label.value, label.value[0]):
                return label
        raise ValueError(f"Unknown sentiment label {value!r}")


def parse_optional(value) -> Optional[SentimentLabel]:
    """Parse a label that may be blank (None, empty string or NaN)"""
    if value is None or (isinstance(value, float) and np.isnan(value)):
        return None
    if str(value).strip() == "":
        return None
    return SentimentLabel.parse(value)


def to_codes(labels: Iterable[SentimentLabel]) -> np.ndarray:
    """Map Positive/Negative labels to POSITIVE_CODE/NEGATIVE_CODE"""
    codes = []
    for label in labels:
        label = SentimentLabel(label)
        if label == SentimentLabel.NEUTRAL:
            raise ValueError("Neutral labels have no binary code")
        codes.append(POSITIVE_CODE if label == SentimentLabel.POSITIVE else NEGATIVE_CODE)
    return np.asarray(codes, dtype=np.int8)


def from_codes(codes: Iterable[int]) -> list[str]:
    """Map binary codes back to label names"""
    return [
        SentimentLabel.POSITIVE.value if code == POSITIVE_CODE else SentimentLabel.NEGATIVE.value
        for code in codes
    ]


class Scorer(str, Enum):
    """Which automatic scorer produced a score"""

    VALENCE = "valence"
    POLARITY = "polarity"


@dataclass(frozen=True)
class SentimentScore:
    """Score of one text; valence compounds lie in (-1, 1), polarity means in [-1, 1]"""

    value: float
    scorer: Scorer
