"""Sentiment lexicons and their TSV loaders"""
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from reddit_sentiment.exceptions import LexiconError

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
DEMO_VALENCE_LEXICON = DATA_DIR / "demo_valence.tsv"
DEMO_BOOSTERS = DATA_DIR / "demo_boosters.txt"
DEMO_NEGATORS = DATA_DIR / "demo_negators.txt"
DEMO_POLARITY_LEXICON = DATA_DIR / "demo_polarity.tsv"

DEFAULT_BOOSTER_INCREMENT = 0.293


@dataclass(frozen=True)
class ValenceLexicon:
    """
    Lexicon of the rule-based valence scorer

    Attributes:
        entries: term -> valence, typically in [-4, 4]
        boosters: term -> increment added to the valence of a following sentiment word
        negators: terms that flip and dampen a following sentiment word
    """

    entries: dict[str, float]
    boosters: dict[str, float] = field(default_factory=dict)
    negators: frozenset = frozenset()

    def __post_init__(self):
        overlap = (
            (set(self.entries) & set(self.boosters))
            | (set(self.entries) & self.negators)
            | (set(self.boosters) & self.negators)
        )
        if overlap:
            raise LexiconError(
                f"Terms appear in more than one valence table: {sorted(overlap)[:10]}"
            )


@dataclass(frozen=True)
class PolarityLexicon:
    """
    Lexicon of the mean-polarity scorer

    Attributes:
        entries: term -> polarity in [-1, 1]
        negators: terms that reverse and halve a following entry
    """

    entries: dict[str, float]
    negators: frozenset = frozenset()

    def __post_init__(self):
        bad = [t for t, p in self.entries.items() if not -1.0 <= p <= 1.0]
        if bad:
            raise LexiconError(f"Polarities outside [-1, 1] for {sorted(bad)[:10]}")


def _data_lines(path: Path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise LexiconError(f"Cannot read lexicon file {path}: {e}") from e
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield line_number, line.rstrip("\r\n").split("\t")


def read_term_values(path: Path, default: Optional[float] = None) -> dict[str, float]:
    """
    Read a term<TAB>value file

    Lines starting with "#" and blank lines are skipped, columns after the second are ignored,
    and terms are lowercased.

    Args:
        path: TSV file
        default: Value for lines holding only a term; None makes such lines an error

    Returns:
        term -> value
    """
    values = {}
    for line_number, columns in _data_lines(path):
        term = columns[0].strip().lower()
        if len(columns) < 2 or not columns[1].strip():
            if default is None:
                raise LexiconError(f"{path}:{line_number}: expected term<TAB>value")
            values[term] = default
            continue
        try:
            values[term] = float(columns[1])
        except ValueError as e:
            raise LexiconError(f"{path}:{line_number}: bad value {columns[1]!r}") from e
    return values


def read_terms(path: Path) -> frozenset:
    """Read a one-term-per-line file"""
    return frozenset(columns[0].strip().lower() for _, columns in _data_lines(path))


def load_valence_lexicon(
    lexicon_path: Path,
    boosters_path: Optional[Path] = None,
    negators_path: Optional[Path] = None,
    booster_increment: float = DEFAULT_BOOSTER_INCREMENT,
) -> ValenceLexicon:
    """
    Load the valence scorer's lexicon

    Boosters and negators take precedence: a term listed both as a sentiment entry and as a
    booster or negator is dropped from the entries, with a warning.

    Args:
        lexicon_path: term<TAB>valence TSV
        boosters_path: One booster per line, optionally term<TAB>increment
        negators_path: One negator per line
        booster_increment: Increment of boosters listed without one

    Returns:
        The lexicon
    """
    entries = read_term_values(lexicon_path)
    if not entries:
        raise LexiconError(f"Valence lexicon {lexicon_path} is empty")
    boosters = read_term_values(boosters_path, default=booster_increment) if boosters_path else {}
    negators = read_terms(negators_path) if negators_path else frozenset()

    negators = frozenset(negators - set(boosters))
    shadowed = sorted(set(entries) & (set(boosters) | negators))
    if shadowed:
        logger.warning(
            "%d lexicon terms are also boosters or negators and are dropped: %s",
            len(shadowed),
            ", ".join(shadowed[:10]),
        )
        entries = {t: v for t, v in entries.items() if t not in set(shadowed)}
    logger.info(
        "Loaded valence lexicon: %d entries, %d boosters, %d negators",
        len(entries),
        len(boosters),
        len(negators),
    )
    return ValenceLexicon(entries=entries, boosters=boosters, negators=negators)


def load_polarity_lexicon(
    lexicon_path: Path, negators_path: Optional[Path] = None
) -> PolarityLexicon:
    """
    Load the polarity scorer's lexicon

    Args:
        lexicon_path: term<TAB>polarity TSV
        negators_path: One negator per line

    Returns:
        The lexicon
    """
    entries = read_term_values(lexicon_path)
    if not entries:
        raise LexiconError(f"Polarity lexicon {lexicon_path} is empty")
    negators = read_terms(negators_path) if negators_path else frozenset()
    logger.info("Loaded polarity lexicon: %d entries, %d negators", len(entries), len(negators))
    return PolarityLexicon(entries=entries, negators=negators)


def load_demo_lexicons() -> tuple[ValenceLexicon, PolarityLexicon]:
    """The small lexicons bundled with the package"""
    return (
        load_valence_lexicon(DEMO_VALENCE_LEXICON, DEMO_BOOSTERS, DEMO_NEGATORS),
        load_polarity_lexicon(DEMO_POLARITY_LEXICON, DEMO_NEGATORS),
    )
