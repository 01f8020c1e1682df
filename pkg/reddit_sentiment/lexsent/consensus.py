"""Binarization, consensus of the two scorers and their agreement statistics"""
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence

import pandas as pd

from reddit_sentiment.corpus.filters import Message
from reddit_sentiment.exceptions import InputDataError
from reddit_sentiment.lexsent.labels import Scorer, SentimentLabel, SentimentScore, parse_optional
from reddit_sentiment.lexsent.lexicon import PolarityLexicon, ValenceLexicon
from reddit_sentiment.lexsent.polarity import score_polarity
from reddit_sentiment.lexsent.valence import ValenceParams, score_valence

logger = logging.getLogger(__name__)

LABEL_COLUMNS = ["message_id", "label_a", "label_b", "consensus"]
AGREEMENT_COLUMNS = [
    "agreed_positive",
    "agreed_negative",
    "inconsistent",
    "total",
    "agreement_pct",
    "positive_share",
    "negative_share",
]


@dataclass(frozen=True)
class Thresholds:
    """Scores >= t_pos are Positive, scores <= t_neg Negative, anything between Neutral"""

    t_pos: float
    t_neg: float

    def __post_init__(self):
        if self.t_neg > self.t_pos:
            raise ValueError(f"t_neg must be <= t_pos, got {self}")

    @classmethod
    def parse(cls, text: str) -> "Thresholds":
        """Parse "t_pos:t_neg", e.g. "0.05:-0.05" """
        try:
            t_pos, t_neg = (float(part) for part in text.split(":"))
        except ValueError as e:
            raise ValueError(f"Thresholds must look like POS:NEG, got {text!r}") from e
        return cls(t_pos, t_neg)

    def __str__(self) -> str:
        return f"{self.t_pos!r}:{self.t_neg!r}"


VALENCE_THRESHOLDS = Thresholds(0.05, -0.05)
# any strictly positive polarity is Positive, any strictly negative one Negative
POLARITY_THRESHOLDS = Thresholds(sys.float_info.epsilon, -sys.float_info.epsilon)
DEFAULT_THRESHOLDS = {Scorer.VALENCE: VALENCE_THRESHOLDS, Scorer.POLARITY: POLARITY_THRESHOLDS}


def binarize(score: SentimentScore, thresholds: Optional[Thresholds] = None) -> SentimentLabel:
    """
    Label a score

    Args:
        score: Score to label
        thresholds: Thresholds to use; None selects the default of the score's scorer

    Returns:
        Positive, Negative or Neutral
    """
    if thresholds is None:
        thresholds = DEFAULT_THRESHOLDS[score.scorer]
    if score.value >= thresholds.t_pos:
        return SentimentLabel.POSITIVE
    if score.value <= thresholds.t_neg:
        return SentimentLabel.NEGATIVE
    return SentimentLabel.NEUTRAL


def consensus(label_a: SentimentLabel, label_b: SentimentLabel) -> Optional[SentimentLabel]:
    """The shared label when both scorers agree on a non-neutral sentiment, else None"""
    if label_a == label_b and label_a != SentimentLabel.NEUTRAL:
        return SentimentLabel(label_a)
    return None


@dataclass(frozen=True)
class ConsensusRecord:
    """Labels of both scorers for one message"""

    message_id: str
    label_a: SentimentLabel
    label_b: SentimentLabel
    consensus: Optional[SentimentLabel]

    def __post_init__(self):
        if self.consensus != consensus(self.label_a, self.label_b):
            raise ValueError(f"Inconsistent consensus for message {self.message_id}")

    @classmethod
    def from_labels(cls, message_id: str, label_a, label_b) -> "ConsensusRecord":
        """Record with the consensus derived from the two labels"""
        label_a, label_b = SentimentLabel(label_a), SentimentLabel(label_b)
        return cls(message_id, label_a, label_b, consensus(label_a, label_b))


@dataclass(frozen=True)
class AgreementStats:
    """
    Agreement between the two scorers over a corpus

    Records where either label is Neutral count as inconsistent.
    """

    agreed_positive: int
    agreed_negative: int
    inconsistent: int
    total: int

    def __post_init__(self):
        if self.agreed_positive + self.agreed_negative + self.inconsistent != self.total:
            raise ValueError(f"Agreement counts do not add up to the total: {self}")
        if self.total <= 0:
            raise ValueError("Agreement statistics need at least one record")

    @classmethod
    def from_counts(
        cls, agreed_positive: int, agreed_negative: int, total: int
    ) -> "AgreementStats":
        """Statistics from aggregate counts"""
        return cls(
            agreed_positive=agreed_positive,
            agreed_negative=agreed_negative,
            inconsistent=total - agreed_positive - agreed_negative,
            total=total,
        )

    @property
    def agreement_pct(self) -> float:
        """Percent of records with the same non-neutral label"""
        return 100.0 * (self.agreed_positive + self.agreed_negative) / self.total

    @property
    def positive_share(self) -> float:
        """Percent of records agreed Positive"""
        return 100.0 * self.agreed_positive / self.total

    @property
    def negative_share(self) -> float:
        """Percent of records agreed Negative"""
        return 100.0 * self.agreed_negative / self.total

    def to_dict(self, tag: str = "") -> dict:
        """Counts and percentages, keys prefixed with tag"""
        prefix = f"{tag}/" if tag else ""
        return {
            prefix + "agreed_positive": self.agreed_positive,
            prefix + "agreed_negative": self.agreed_negative,
            prefix + "inconsistent": self.inconsistent,
            prefix + "total": self.total,
            prefix + "agreement_pct": self.agreement_pct,
            prefix + "positive_share": self.positive_share,
            prefix + "negative_share": self.negative_share,
        }


def agreement_stats(records: Sequence[ConsensusRecord]) -> AgreementStats:
    """
    Count agreement between the two scorers

    Args:
        records: Consensus records, non-empty

    Returns:
        The statistics
    """
    if len(records) == 0:
        raise ValueError("agreement_stats needs at least one record")
    positive = sum(1 for r in records if r.consensus == SentimentLabel.POSITIVE)
    negative = sum(1 for r in records if r.consensus == SentimentLabel.NEGATIVE)
    return AgreementStats.from_counts(positive, negative, len(records))


def label_messages(
    messages: Iterable[Message],
    valence_lexicon: ValenceLexicon,
    polarity_lexicon: PolarityLexicon,
    params: ValenceParams = ValenceParams(),
    thresholds_a: Thresholds = VALENCE_THRESHOLDS,
    thresholds_b: Thresholds = POLARITY_THRESHOLDS,
) -> list[ConsensusRecord]:
    """
    Label messages with both scorers and take their consensus

    Args:
        messages: Messages to label
        valence_lexicon: Lexicon of scorer A
        polarity_lexicon: Lexicon of scorer B
        params: Rule constants of scorer A
        thresholds_a: Binarization thresholds of scorer A
        thresholds_b: Binarization thresholds of scorer B

    Returns:
        One record per message, in input order
    """
    records = []
    for message in messages:
        label_a = binarize(score_valence(message.body, valence_lexicon, params), thresholds_a)
        label_b = binarize(score_polarity(message.body, polarity_lexicon), thresholds_b)
        records.append(ConsensusRecord.from_labels(message.id, label_a, label_b))
    return records


def write_labels(records: Iterable[ConsensusRecord], path: Path) -> None:
    """Write message_id,label_a,label_b,consensus with a blank consensus when None"""
    frame = pd.DataFrame(
        [
            (
                r.message_id,
                r.label_a.value,
                r.label_b.value,
                r.consensus.value if r.consensus else "",
            )
            for r in records
        ],
        columns=LABEL_COLUMNS,
    )
    frame.to_csv(path, index=False)
    logger.info("Wrote %d label records to %s", len(frame), path)


def read_labels(path: Path) -> list[ConsensusRecord]:
    """Read a label CSV written by write_labels"""
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise InputDataError(f"Cannot read labels {path}: {e}") from e
    missing = set(LABEL_COLUMNS) - set(frame.columns)
    if missing:
        raise InputDataError(f"Label file {path} lacks columns {sorted(missing)}")
    return [
        ConsensusRecord(
            message_id=row.message_id,
            label_a=SentimentLabel.parse(row.label_a),
            label_b=SentimentLabel.parse(row.label_b),
            consensus=parse_optional(row.consensus),
        )
        for row in frame.itertuples(index=False)
    ]
