"""Interactive, blind and resumable labelling sessions"""
import logging
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Mapping

import pandas as pd

from reddit_sentiment.annotate.sampling import AnnotationTask
from reddit_sentiment.corpus.filters import Message
from reddit_sentiment.exceptions import InputDataError
from reddit_sentiment.lexsent.labels import SentimentLabel

logger = logging.getLogger(__name__)

PROMPT = "label [p/n]: "
RECORD_COLUMNS = ["task_id", "message_id", "annotator_id", "label", "timestamp"]
_ANSWERS = {
    "p": SentimentLabel.POSITIVE,
    "positive": SentimentLabel.POSITIVE,
    "n": SentimentLabel.NEGATIVE,
    "negative": SentimentLabel.NEGATIVE,
}


@dataclass(frozen=True)
class AnnotationRecord:
    """One annotator's label for one message"""

    task_id: str
    message_id: str
    annotator_id: str
    label: SentimentLabel
    timestamp: str = ""

    def __post_init__(self):
        if self.label not in (SentimentLabel.POSITIVE, SentimentLabel.NEGATIVE):
            raise ValueError(f"Annotation labels are positive or negative, got {self.label}")


def _utc_now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def record_path(directory: Path, task_id: str, annotator_id: str) -> Path:
    """File holding one annotator's records for one task"""
    return Path(directory) / f"{task_id}.{annotator_id}.csv"


def read_records(path: Path) -> list[AnnotationRecord]:
    """
    Read an annotation record CSV

    Args:
        path: task_id,message_id,annotator_id,label,timestamp file

    Returns:
        Records in file order
    """
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise InputDataError(f"Cannot read annotation records {path}: {e}") from e
    missing = set(RECORD_COLUMNS) - set(frame.columns)
    if missing:
        raise InputDataError(f"Annotation file {path} lacks columns {sorted(missing)}")
    return [
        AnnotationRecord(
            task_id=row.task_id,
            message_id=row.message_id,
            annotator_id=row.annotator_id,
            label=SentimentLabel.parse(row.label),
            timestamp=row.timestamp,
        )
        for row in frame.itertuples(index=False)
    ]


def _append_record(path: Path, record: AnnotationRecord) -> None:
    row = pd.DataFrame(
        [
            (
                record.task_id,
                record.message_id,
                record.annotator_id,
                record.label.value,
                record.timestamp,
            )
        ],
        columns=RECORD_COLUMNS,
    )
    row.to_csv(path, mode="a", header=not path.exists(), index=False)


def run_session(
    task: AnnotationTask,
    messages: Mapping[str, Message],
    annotator_id: str,
    store_dir: Path,
    input_fn: Callable[[str], str] = input,
    output_fn: Callable[[str], None] = print,
    clock: Callable[[], str] = _utc_now,
) -> list[AnnotationRecord]:
    """
    Let one annotator label a task

    Each message body is shown in task order, followed by the prompt "label [p/n]: ". Only
    "p"/"positive" and "n"/"negative" are accepted; "q" (or end of input, or Ctrl-C) ends the
    session. Every label is appended to the annotator's record file as soon as it is given, so
    a later session resumes at the first unlabelled message. Tool labels and other annotators'
    labels are never shown.

    Args:
        task: The task to label
        messages: Message bodies by id
        annotator_id: Name of the annotator
        store_dir: Directory of the record files
        input_fn: Reads one answer after showing a prompt
        output_fn: Shows one line of text
        clock: Timestamp of each record

    Returns:
        All records of this annotator for the task, earlier sessions included
    """
    if not annotator_id or not annotator_id.strip():
        raise ValueError("annotator_id must not be empty")
    unknown = [mid for mid in task.message_ids if mid not in messages]
    if unknown:
        raise InputDataError(f"Task {task.task_id} refers to unknown messages: {unknown[:10]}")

    path = record_path(store_dir, task.task_id, annotator_id)
    records = read_records(path) if path.exists() else []
    if any(r.task_id != task.task_id or r.annotator_id != annotator_id for r in records):
        raise InputDataError(f"{path} holds records of another task or annotator")
    labelled = {r.message_id for r in records}
    remaining = [mid for mid in task.message_ids if mid not in labelled]
    if labelled:
        logger.info(
            "Resuming task %s for %s at message %d", task.task_id, annotator_id, len(labelled) + 1
        )

    for mid in remaining:
        output_fn(f"--- message {len(records) + 1} of {len(task.message_ids)} ---")
        output_fn(messages[mid].body)
        label = None
        while label is None:
            try:
                answer = input_fn(PROMPT).strip().lower()
            except (EOFError, KeyboardInterrupt):
                output_fn("Session interrupted, progress saved.")
                return records
            if answer == "q":
                output_fn("Progress saved.")
                return records
            label = _ANSWERS.get(answer)
            if label is None:
                output_fn("Please answer p (positive), n (negative) or q (save and quit).")
        record = AnnotationRecord(task.task_id, mid, annotator_id, label, clock())
        _append_record(path, record)
        records.append(record)

    output_fn(f"Task {task.task_id} complete: {len(records)} messages labelled.")
    return records
