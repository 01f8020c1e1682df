"""Reading and writing line-delimited comment dumps"""
import json
import logging
import os
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, Iterator, Optional

import zstandard as zstd

from reddit_sentiment.exceptions import InputDataError

logger = logging.getLogger(__name__)

REMOVED_BODIES = ("[deleted]", "[removed]")
_ZST_CHUNK_SIZE = 2**16


@dataclass(frozen=True)
class RawComment:
    """One comment as found in a dump"""

    id: str
    author: str
    body: str
    created_utc: int
    subreddit: str

    def to_dict(self) -> dict:
        """Record in dump field order"""
        return asdict(self)


def parse_record(line: bytes) -> Optional[RawComment]:
    """
    Parse one dump line

    Args:
        line: Raw bytes of the line, without the newline

    Returns:
        The comment, or None when the line is not valid UTF-8 JSON with a usable record
    """
    try:
        obj = json.loads(line.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError):
        return None
    if not isinstance(obj, dict):
        return None

    comment_id = obj.get("id")
    body = obj.get("body")
    if not isinstance(comment_id, str) or not comment_id or not isinstance(body, str):
        return None
    if body.strip() in REMOVED_BODIES:
        return None
    try:
        created_utc = int(obj.get("created_utc", 0))
    except (TypeError, ValueError):
        return None
    return RawComment(
        id=comment_id,
        author=str(obj.get("author") or ""),
        body=body,
        created_utc=created_utc,
        subreddit=str(obj.get("subreddit") or ""),
    )


def _iter_zst_lines(handle) -> Iterator[bytes]:
    dctx = zstd.ZstdDecompressor(max_window_size=2**31)
    with dctx.stream_reader(handle) as reader:
        buffer = b""
        while True:
            chunk = reader.read(_ZST_CHUNK_SIZE)
            if not chunk:
                break
            buffer += chunk
            *lines, buffer = buffer.split(b"\n")
            yield from lines
        # last line without a trailing newline
        if buffer:
            yield buffer


class CommentDump:
    """
    Iterable over the valid comments of a dump file

    Plain files hold one JSON object per line; files ending in ".zst" are
    Zstandard-compressed. Malformed lines, removed bodies and repeated ids are skipped and
    counted in `skipped` once iteration finishes.
    """

    def __init__(self, path: Path):
        self.path = Path(path)
        self.skipped = 0

    def _lines(self, handle) -> Iterator[bytes]:
        if self.path.suffix == ".zst":
            yield from _iter_zst_lines(handle)
        else:
            for line in handle:
                yield line.rstrip(b"\r\n")

    def __iter__(self) -> Iterator[RawComment]:
        self.skipped = 0
        seen_ids = set()
        try:
            handle = open(self.path, "rb")
        except OSError as e:
            raise InputDataError(f"Cannot read dump {self.path}: {e}") from e
        with handle:
            for line_number, line in enumerate(self._lines(handle), start=1):
                if not line.strip():
                    continue
                record = parse_record(line)
                if record is None or record.id in seen_ids:
                    self.skipped += 1
                    logger.debug("Skipping line %d of %s", line_number, self.path)
                    continue
                seen_ids.add(record.id)
                yield record
        if self.skipped:
            logger.info("Skipped %d malformed lines in %s", self.skipped, self.path)


def load_dump(path: Path) -> CommentDump:
    """
    Open a comment dump for streaming

    Args:
        path: Line-delimited JSON file, optionally ".zst" compressed

    Returns:
        CommentDump to iterate; its `skipped` attribute counts malformed lines
    """
    path = Path(path)
    if not path.is_file() or not os.access(path, os.R_OK):
        raise InputDataError(f"Cannot read dump {path}: not a readable file")
    return CommentDump(path)


def write_dump(records: Iterable[RawComment], path: Path) -> int:
    """
    Write comments in the line-delimited dump format

    Args:
        records: Comments to write, in order
        path: Output file

    Returns:
        Number of records written
    """
    count = 0
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        for record in records:
            out.write(json.dumps(record.to_dict(), ensure_ascii=False, sort_keys=False))
            out.write("\n")
            count += 1
    logger.info("Wrote %d comments to %s", count, path)
    return count
