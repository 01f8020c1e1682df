import json

import pytest

from reddit_sentiment.annotate.sampling import (
    AnnotationTask,
    consensus_predicate,
    sample_messages,
)
from reddit_sentiment.corpus.filters import CANADA, UK, Message
from reddit_sentiment.exceptions import InputDataError, InsufficientMessagesError
from reddit_sentiment.lexsent.consensus import ConsensusRecord
from reddit_sentiment.lexsent.labels import SentimentLabel

CORPUS = [Message(f"c{i}", "covid", 1, CANADA) for i in range(40)] + [
    Message(f"u{i}", "covid", 1, UK) for i in range(40)
]


def test_sample_messages_is_seeded():
    first = sample_messages(CORPUS, 30, seed=7)
    assert first == sample_messages(CORPUS, 30, seed=7)
    assert first.message_ids != sample_messages(CORPUS, 30, seed=8).message_ids
    assert len(set(first.message_ids)) == 30
    assert first.created_from_seed == 7


def test_sample_messages_source_filter():
    task = sample_messages(CORPUS, 30, seed=0, task_id="canada-30", source_filter=CANADA)
    assert task.task_id == "canada-30"
    assert all(mid.startswith("c") for mid in task.message_ids)
    assert task.source_filter == CANADA


def test_sample_messages_predicate():
    records = [
        ConsensusRecord.from_labels(f"c{i}", label, label)
        for i, label in enumerate([SentimentLabel.NEGATIVE] * 5 + [SentimentLabel.POSITIVE] * 5)
    ]
    task = sample_messages(
        CORPUS, 5, seed=0, predicate=consensus_predicate(records), filter_name="negative"
    )
    assert sorted(task.message_ids) == [f"c{i}" for i in range(5)]
    assert task.filter_name == "negative"

    with pytest.raises(InsufficientMessagesError) as error:
        sample_messages(CORPUS, 6, seed=0, predicate=consensus_predicate(records))
    assert (error.value.requested, error.value.available) == (6, 5)


def test_sample_messages_rejects_empty_sample():
    with pytest.raises(ValueError):
        sample_messages(CORPUS, 0, seed=0)


def test_task_rejects_duplicates():
    with pytest.raises(ValueError):
        AnnotationTask("t", ("a", "a"), None, 0)


def test_task_save_and_load(tmp_path):
    task = sample_messages(CORPUS, 3, seed=1, task_id="t1", source_filter=UK)
    path = tmp_path / "t1.task.json"
    task.save(path)
    assert json.loads(path.read_text())["message_ids"] == list(task.message_ids)
    assert AnnotationTask.load(path) == task


def test_task_load_errors(tmp_path):
    with pytest.raises(InputDataError):
        AnnotationTask.load(tmp_path / "missing.json")
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"task_id": "t"}))
    with pytest.raises(InputDataError):
        AnnotationTask.load(path)
