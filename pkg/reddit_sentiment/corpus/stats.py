"""Dataset statistics: contributors, topic share and length bands"""
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

import numpy as np
import pandas as pd

from reddit_sentiment.corpus.dump import RawComment
from reddit_sentiment.corpus.filters import LengthBand, Message

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusStats:
    """
    Counts describing one dataset

    Attributes:
        contributors: Number of distinct authors over all posted messages
        messages_posted: Number of posted messages
        covid_related: Number of topic-related, non-bot messages
        below_band: Topic messages shorter than the band
        above_band: Topic messages longer than the band
        in_band: Topic messages inside the band
        authors: The distinct authors, kept so that shard statistics can be merged
    """

    contributors: int
    messages_posted: int
    covid_related: int
    below_band: int
    above_band: int
    in_band: int
    authors: frozenset = field(default=frozenset(), repr=False, compare=False)

    def __post_init__(self):
        if self.covid_related != self.below_band + self.above_band + self.in_band:
            raise ValueError(f"Band counts do not add up to covid_related: {self}")

    def merge(self, other: "CorpusStats") -> "CorpusStats":
        """Combine the statistics of two disjoint shards"""
        authors = self.authors | other.authors
        return CorpusStats(
            contributors=len(authors),
            messages_posted=self.messages_posted + other.messages_posted,
            covid_related=self.covid_related + other.covid_related,
            below_band=self.below_band + other.below_band,
            above_band=self.above_band + other.above_band,
            in_band=self.in_band + other.in_band,
            authors=authors,
        )

    def to_frame(self, band: LengthBand = LengthBand()) -> pd.DataFrame:
        """Table of name,count rows, one per statistic"""
        rows = [
            ("contributors", self.contributors),
            ("messages_posted", self.messages_posted),
            ("covid_related", self.covid_related),
            (f"below_{band.min_words}_words", self.below_band),
            (f"above_{band.max_words}_words", self.above_band),
            (f"in_band_{band.min_words}_{band.max_words}_words", self.in_band),
        ]
        return pd.DataFrame(rows, columns=["name", "count"])


def corpus_stats(
    raw: Iterable[RawComment], covid: Iterable[Message], band: LengthBand = LengthBand()
) -> CorpusStats:
    """
    Compute dataset statistics

    Args:
        raw: Every posted comment
        covid: The keyword and bot filtered subset of raw
        band: Length band separating outliers

    Returns:
        The statistics
    """
    authors = set()
    messages_posted = 0
    for comment in raw:
        messages_posted += 1
        if comment.author:
            authors.add(comment.author)

    below = above = inside = 0
    for message in covid:
        if message.word_count < band.min_words:
            below += 1
        elif message.word_count > band.max_words:
            above += 1
        else:
            inside += 1
    return CorpusStats(
        contributors=len(authors),
        messages_posted=messages_posted,
        covid_related=below + above + inside,
        below_band=below,
        above_band=above,
        in_band=inside,
        authors=frozenset(authors),
    )


def length_histogram(messages: Iterable[Message], bin_width: int = 10) -> pd.DataFrame:
    """
    Distribution of message lengths in words

    Args:
        messages: Messages to count
        bin_width: Width of each bin in words

    Returns:
        DataFrame with bin_start, bin_end (inclusive) and count, empty bins included
    """
    if bin_width < 1:
        raise ValueError(f"bin_width must be >= 1, got {bin_width}")
    lengths = np.fromiter((m.word_count for m in messages), dtype=np.int64)
    if len(lengths) == 0:
        return pd.DataFrame({"bin_start": [], "bin_end": [], "count": []}, dtype=np.int64)
    counts = np.bincount(lengths // bin_width)
    starts = np.arange(len(counts)) * bin_width
    return pd.DataFrame({"bin_start": starts, "bin_end": starts + bin_width - 1, "count": counts})


def write_stats(stats: CorpusStats, band: LengthBand, path: Path) -> None:
    """Write the name,count statistics CSV"""
    stats.to_frame(band).to_csv(path, index=False)
    logger.info("Wrote corpus statistics to %s", path)
