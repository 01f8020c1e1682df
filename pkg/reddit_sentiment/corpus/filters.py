"""Topic, bot, date and length filters"""
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from reddit_sentiment.corpus.dump import RawComment
from reddit_sentiment.features.tokenize import tokenize

logger = logging.getLogger(__name__)

DEFAULT_KEYWORDS: tuple[str, ...] = (
    "lockdown",
    "pandemic",
    "coronavirus",
    "quarantine",
    "covid",
    "vaccine",
    "first dose",
    "second dose",
    "third dose",
    "booster",
    "vaccination",
    "first shot",
    "second shot",
    "third shot",
)
DEFAULT_BOT_BLOCKLIST: tuple[str, ...] = ("AutoModerator",)
BOT_DECLARATION = "i am a bot"

CANADA = "Canada"
UK = "UK"
_SOURCES = {"canada": CANADA, "unitedkingdom": UK}

# reddit markdown that is stripped before looking for a bot self-declaration
_MARKUP_RE = re.compile(r"[\^*_~`>#\[\]]")
_WHITESPACE_RE = re.compile(r"\s+")


def word_count(body: str) -> int:
    """Number of maximal non-whitespace runs in body"""
    return len(body.split())


def source_of(subreddit: str) -> str:
    """Dataset a subreddit belongs to: "Canada", "UK", or the subreddit name itself"""
    return _SOURCES.get(subreddit.strip().lower(), subreddit)


@dataclass(frozen=True)
class Message:
    """A comment kept for analysis"""

    id: str
    body: str
    word_count: int
    source: str

    def __post_init__(self):
        if self.word_count != word_count(self.body):
            raise ValueError(f"word_count of message {self.id} does not match its body")

    @classmethod
    def from_comment(cls, comment: RawComment) -> "Message":
        """Build a message from a dump record"""
        return cls(
            id=comment.id,
            body=comment.body,
            word_count=word_count(comment.body),
            source=source_of(comment.subreddit),
        )


@dataclass(frozen=True)
class LengthBand:
    """Inclusive range of message lengths in words"""

    min_words: int = 11
    max_words: int = 249

    def __post_init__(self):
        if self.min_words < 0 or self.max_words < 0:
            raise ValueError(f"Band bounds must be >= 0, got {self}")
        if self.min_words > self.max_words:
            raise ValueError(f"Band min_words > max_words: {self}")

    @classmethod
    def parse(cls, text: str) -> "LengthBand":
        """Parse "min:max", e.g. "11:249" """
        try:
            low, high = (int(part) for part in text.split(":"))
        except ValueError as e:
            raise ValueError(f"Band must look like MIN:MAX, got {text!r}") from e
        return cls(low, high)

    def __str__(self) -> str:
        return f"{self.min_words}:{self.max_words}"

    def contains(self, n_words: int) -> bool:
        """Whether a length lies inside the band"""
        return self.min_words <= n_words <= self.max_words


@lru_cache(maxsize=32)
def _keyword_phrases(keywords: tuple[str, ...]) -> tuple[tuple[str, ...], ...]:
    phrases = tuple(tuple(tokenize(k)) for k in keywords)
    return tuple(p for p in phrases if p)


def is_covid_related(body: str, keywords: Sequence[str] = DEFAULT_KEYWORDS) -> bool:
    """
    Whether a comment mentions one of the topic keywords

    Both body and keywords go through the shared tokenizer. A single-word keyword matches any
    token it is a prefix of ("vaccine" matches "vaccines"); a multi-word keyword must occur as a
    contiguous run of tokens.

    Args:
        body: Comment text
        keywords: Keyword phrases, non-empty

    Returns:
        True if any keyword phrase occurs
    """
    if not keywords:
        raise ValueError("keywords must not be empty")
    tokens = tokenize(body)
    if not tokens:
        return False
    for phrase in _keyword_phrases(tuple(keywords)):
        if len(phrase) == 1:
            if any(token.startswith(phrase[0]) for token in tokens):
                return True
            continue
        width = len(phrase)
        for start in range(len(tokens) - width + 1):
            if tuple(tokens[start : start + width]) == phrase:
                return True
    return False


def normalize_markup(body: str) -> str:
    """Lowercase body with reddit markdown removed and whitespace collapsed"""
    return _WHITESPACE_RE.sub(" ", _MARKUP_RE.sub("", body)).strip().lower()


def is_bot(author: str, body: str, blocklist: Sequence[str] = DEFAULT_BOT_BLOCKLIST) -> bool:
    """
    Whether a comment was written by a bot

    A comment is a bot's when the author name ends in "bot" (any case), the author is in the
    blocklist (any case), or the body declares "i am a bot" once markup is stripped.

    Args:
        author: Author name
        body: Comment text
        blocklist: Author names always treated as bots

    Returns:
        True for bot comments
    """
    name = (author or "").strip().lower()
    if name.endswith("bot"):
        return True
    if name in {b.lower() for b in blocklist}:
        return True
    return BOT_DECLARATION in normalize_markup(body or "")


def in_date_range(created_utc: int, start: Optional[int] = None, end: Optional[int] = None) -> bool:
    """Whether an epoch timestamp lies in the inclusive [start, end] window; None is unbounded"""
    if start is not None and created_utc < start:
        return False
    if end is not None and created_utc > end:
        return False
    return True


@dataclass(frozen=True)
class FilterCounts:
    """How many records each stage of filter_corpus removed"""

    seen: int
    off_topic: int
    bots: int
    out_of_range: int
    kept: int


def filter_corpus(
    records: Iterable[RawComment],
    keywords: Sequence[str] = DEFAULT_KEYWORDS,
    blocklist: Sequence[str] = DEFAULT_BOT_BLOCKLIST,
    start_utc: Optional[int] = None,
    end_utc: Optional[int] = None,
) -> tuple[list[RawComment], FilterCounts]:
    """
    Keep the topic-related, human-written comments of a dump

    Stages run in order: keyword filter, bot filter, date window.

    Args:
        records: Dump records
        keywords: Topic keyword phrases
        blocklist: Bot author names
        start_utc: Earliest creation time kept, inclusive
        end_utc: Latest creation time kept, inclusive

    Returns:
        The kept records in input order and the per-stage counts
    """
    kept = []
    seen = off_topic = bots = out_of_range = 0
    for record in records:
        seen += 1
        if not is_covid_related(record.body, keywords):
            off_topic += 1
        elif is_bot(record.author, record.body, blocklist):
            bots += 1
        elif not in_date_range(record.created_utc, start_utc, end_utc):
            out_of_range += 1
        else:
            kept.append(record)
    counts = FilterCounts(
        seen=seen, off_topic=off_topic, bots=bots, out_of_range=out_of_range, kept=len(kept)
    )
    logger.info("Corpus filter: %s", counts)
    return kept, counts


@dataclass(frozen=True)
class LengthFilterResult:
    """Outcome of filter_by_length"""

    retained: list
    dropped_short: int
    dropped_long: int


def filter_by_length(
    messages: Iterable[Message], band: LengthBand = LengthBand()
) -> LengthFilterResult:
    """
    Drop length outliers

    Args:
        messages: Messages to filter
        band: Inclusive band of retained lengths

    Returns:
        Retained messages in input order and the numbers dropped below and above the band
    """
    retained = []
    dropped_short = dropped_long = 0
    for message in messages:
        if message.word_count < band.min_words:
            dropped_short += 1
        elif message.word_count > band.max_words:
            dropped_long += 1
        else:
            retained.append(message)
    return LengthFilterResult(
        retained=retained, dropped_short=dropped_short, dropped_long=dropped_long
    )
