"""Random selection of annotation groups"""
import json
import logging
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from reddit_sentiment.corpus.filters import Message
from reddit_sentiment.exceptions import InputDataError, InsufficientMessagesError
from reddit_sentiment.lexsent.consensus import ConsensusRecord
from reddit_sentiment.lexsent.labels import SentimentLabel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AnnotationTask:
    """
    A group of messages given to every annotator

    Attributes:
        task_id: Name of the task
        message_ids: Messages in presentation order
        source_filter: Dataset the sample was restricted to, if any
        created_from_seed: Seed the sample was drawn with
        filter_name: Description of the predicate the sample was restricted with, if any
    """

    task_id: str
    message_ids: tuple[str, ...]
    source_filter: Optional[str]
    created_from_seed: int
    filter_name: Optional[str] = None

    def __post_init__(self):
        if len(set(self.message_ids)) != len(self.message_ids):
            raise ValueError(f"Task {self.task_id} lists a message more than once")

    def save(self, path: Path) -> None:
        """Write the task as JSON"""
        payload = asdict(self)
        payload["message_ids"] = list(self.message_ids)
        Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
        logger.info("Saved task %s (%d messages) to %s", self.task_id, len(self.message_ids), path)

    @classmethod
    def load(cls, path: Path) -> "AnnotationTask":
        """Read a task written by save"""
        try:
            payload = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise InputDataError(f"Cannot read task {path}: {e}") from e
        try:
            payload["message_ids"] = tuple(payload["message_ids"])
            return cls(**payload)
        except (KeyError, TypeError, ValueError) as e:
            raise InputDataError(f"Malformed task {path}: {e}") from e


def consensus_predicate(
    records: Iterable[ConsensusRecord], label: SentimentLabel = SentimentLabel.NEGATIVE
) -> Callable[[Message], bool]:
    """Predicate accepting the messages whose tool consensus is label"""
    ids = {r.message_id for r in records if r.consensus == label}
    return lambda message: message.id in ids


def sample_messages(
    corpus: Sequence[Message],
    n: int,
    seed: int,
    predicate: Optional[Callable[[Message], bool]] = None,
    task_id: str = "task",
    source_filter: Optional[str] = None,
    filter_name: Optional[str] = None,
) -> AnnotationTask:
    """
    Draw a uniform random sample without replacement

    Args:
        corpus: Messages to sample from
        n: Sample size
        seed: Seed; the same seed and corpus always give the same sample
        predicate: Only messages passing it are eligible
        task_id: Name of the task
        source_filter: Only messages of this dataset are eligible
        filter_name: Description of predicate, stored with the task

    Returns:
        Task listing the sampled ids in random order
    """
    if n < 1:
        raise ValueError(f"Sample size must be >= 1, got {n}")
    candidates = [
        m
        for m in corpus
        if (source_filter is None or m.source == source_filter)
        and (predicate is None or predicate(m))
    ]
    if len(candidates) < n:
        raise InsufficientMessagesError(n, len(candidates))
    picks = np.random.default_rng(seed).choice(len(candidates), size=n, replace=False)
    return AnnotationTask(
        task_id=task_id,
        message_ids=tuple(candidates[int(i)].id for i in picks),
        source_filter=source_filter,
        created_from_seed=int(seed),
        filter_name=filter_name,
    )
