""" Util evaluation functions """
import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
import pandas as pd

from reddit_sentiment.corpus.filters import Message
from reddit_sentiment.exceptions import InputDataError
from reddit_sentiment.features.tokenize import tokenize
from reddit_sentiment.lexsent.consensus import ConsensusRecord
from reddit_sentiment.lexsent.labels import to_codes

logger = logging.getLogger(__name__)

LABELLED_COLUMNS = ("message_id", "body", "label")


@dataclass(frozen=True)
class LabelledCorpus:
    """Tokenized consensus-labelled messages ready for cross-validation"""

    message_ids: tuple[str, ...]
    token_lists: tuple[tuple[str, ...], ...]
    labels: np.ndarray

    def __post_init__(self):
        if not len(self.message_ids) == len(self.token_lists) == len(self.labels):
            raise ValueError("LabelledCorpus fields differ in length")

    def __len__(self) -> int:
        return len(self.message_ids)


def check_labelled_df(labelled_df: pd.DataFrame):
    """
    Check the dataframe has the correct columns

    Args:
        labelled_df: labelled messages dataframe
    """
    if len(labelled_df) == 0:
        raise InputDataError("No labelled messages to evaluate")
    missing = [column for column in LABELLED_COLUMNS if column not in labelled_df.keys()]
    if missing:
        raise InputDataError(f"Labelled messages lack columns {missing}")
    if labelled_df["message_id"].duplicated().any():
        raise InputDataError("Labelled messages contain duplicate ids")


def labelled_frame(messages: Iterable[Message], records: Sequence[ConsensusRecord]) -> pd.DataFrame:
    """
    Join messages with their consensus label

    Only messages both scorers agree on enter the frame.

    Args:
        messages: Corpus messages
        records: Consensus records of (a superset of) the messages

    Returns:
        Frame of message_id, body, label in corpus order
    """
    consensus = {r.message_id: r.consensus for r in records if r.consensus is not None}
    rows = [(m.id, m.body, consensus[m.id].value) for m in messages if m.id in consensus]
    return pd.DataFrame(rows, columns=list(LABELLED_COLUMNS))


def labelled_corpus(labelled_df: pd.DataFrame) -> LabelledCorpus:
    """Tokenize a checked labelled frame"""
    check_labelled_df(labelled_df)
    return LabelledCorpus(
        message_ids=tuple(labelled_df["message_id"]),
        token_lists=tuple(tuple(tokenize(body)) for body in labelled_df["body"]),
        labels=to_codes(labelled_df["label"]),
    )
