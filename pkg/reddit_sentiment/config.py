"""Pipeline configuration: dataclass defaults, INI files and command-line overrides"""
import configparser
import logging
from dataclasses import dataclass, field, fields, replace
from enum import Enum
from pathlib import Path
from typing import Any, Mapping, Optional, Union, get_args, get_origin, get_type_hints

from reddit_sentiment.classify.train import Algorithm, ClassifierParams
from reddit_sentiment.corpus.filters import DEFAULT_BOT_BLOCKLIST, DEFAULT_KEYWORDS, LengthBand
from reddit_sentiment.evaluation.evaluation import Averaging, VocabularyScope
from reddit_sentiment.exceptions import InputDataError
from reddit_sentiment.features.vectorize import Representation
from reddit_sentiment.lexsent.consensus import POLARITY_THRESHOLDS, VALENCE_THRESHOLDS, Thresholds
from reddit_sentiment.lexsent.lexicon import (
    DEMO_BOOSTERS,
    DEMO_NEGATORS,
    DEMO_POLARITY_LEXICON,
    DEMO_VALENCE_LEXICON,
)
from reddit_sentiment.lexsent.valence import ValenceParams

logger = logging.getLogger(__name__)

EFFECTIVE_CONFIG_NAME = "effective_config.ini"


@dataclass(frozen=True)
class CorpusConfig:
    """Topic, bot, date and length filtering"""

    keywords: tuple[str, ...] = DEFAULT_KEYWORDS
    bot_blocklist: tuple[str, ...] = DEFAULT_BOT_BLOCKLIST
    band: LengthBand = LengthBand()
    start_utc: Optional[int] = None
    end_utc: Optional[int] = None
    histogram_bin_width: int = 10


@dataclass(frozen=True)
class LexiconConfig:
    """Lexicon files; the defaults are the small lexicons bundled with the package"""

    valence: Path = DEMO_VALENCE_LEXICON
    boosters: Optional[Path] = DEMO_BOOSTERS
    negators: Optional[Path] = DEMO_NEGATORS
    polarity: Path = DEMO_POLARITY_LEXICON
    polarity_negators: Optional[Path] = DEMO_NEGATORS


@dataclass(frozen=True)
class LabelConfig:
    """Binarization thresholds of the valence (A) and polarity (B) scorers"""

    thresholds_a: Thresholds = VALENCE_THRESHOLDS
    thresholds_b: Thresholds = POLARITY_THRESHOLDS


@dataclass(frozen=True)
class FeatureConfig:
    """Representations and the minimum word frequency grid"""

    representations: tuple[Representation, ...] = tuple(Representation)
    min_freq_min: int = 1
    min_freq_max: int = 10
    vocabulary_scope: VocabularyScope = VocabularyScope.FOLD

    @property
    def min_freq_range(self) -> range:
        """Minimum word frequencies searched, both ends included"""
        return range(self.min_freq_min, self.min_freq_max + 1)


@dataclass(frozen=True)
class ClassifierConfig:
    """Algorithms and hyperparameters; the SVM soft margin depends on the dataset"""

    algorithms: tuple[Algorithm, ...] = tuple(Algorithm)
    nb_alpha: float = 1.0
    svm_c_canada: float = 0.3
    svm_c_uk: float = 0.4
    svm_c_other: float = 0.3
    svm_epochs: int = 20
    svm_batch_size: int = 32
    rf_n_trees: int = 100
    rf_max_features: Optional[int] = None
    rf_max_depth: Optional[int] = None
    rf_bootstrap: bool = True

    def svm_c_for(self, dataset: str) -> float:
        """SVM soft margin for a dataset name, case-insensitive; unknown names get svm_c_other"""
        return {"canada": self.svm_c_canada, "uk": self.svm_c_uk}.get(
            dataset.lower(), self.svm_c_other
        )

    def to_params(self, dataset: str) -> ClassifierParams:
        """Hyperparameters for one dataset"""
        return ClassifierParams(
            nb_alpha=self.nb_alpha,
            svm_c=self.svm_c_for(dataset),
            svm_epochs=self.svm_epochs,
            svm_batch_size=self.svm_batch_size,
            rf_n_trees=self.rf_n_trees,
            rf_max_features=self.rf_max_features,
            rf_max_depth=self.rf_max_depth,
            rf_bootstrap=self.rf_bootstrap,
        )


@dataclass(frozen=True)
class CVConfig:
    """Cross-validation"""

    k: int = 10
    averaging: Averaging = Averaging.POOLED


@dataclass(frozen=True)
class RunConfig:
    """Master seed, output directory, dataset name and parallelism"""

    seed: int = 0
    out: Path = Path("out")
    dataset: str = "canada"
    n_jobs: int = 1


@dataclass(frozen=True)
class PipelineConfig:
    """Complete configuration; every field is a section of the INI file"""

    corpus: CorpusConfig = field(default_factory=CorpusConfig)
    lexicon: LexiconConfig = field(default_factory=LexiconConfig)
    label: LabelConfig = field(default_factory=LabelConfig)
    valence: ValenceParams = field(default_factory=ValenceParams)
    features: FeatureConfig = field(default_factory=FeatureConfig)
    classifier: ClassifierConfig = field(default_factory=ClassifierConfig)
    cv: CVConfig = field(default_factory=CVConfig)
    run: RunConfig = field(default_factory=RunConfig)


def _parse_value(text: str, hint) -> Any:
    text = text.strip()
    origin = get_origin(hint)
    if origin is Union:
        if text == "":
            return None
        (inner,) = [arg for arg in get_args(hint) if arg is not type(None)]
        return _parse_value(text, inner)
    if origin is tuple:
        element = get_args(hint)[0]
        return tuple(_parse_value(item, element) for item in text.split(",") if item.strip())
    if hint is bool:
        states = configparser.ConfigParser.BOOLEAN_STATES
        if text.lower() not in states:
            raise ValueError(f"not a boolean: {text!r}")
        return states[text.lower()]
    if hasattr(hint, "parse"):
        return hint.parse(text)
    return hint(text)


def _format_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, tuple):
        return ", ".join(_format_value(v) for v in value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _update_section(section, values: Mapping[str, str], name: str):
    hints = get_type_hints(type(section))
    known = {f.name for f in fields(section) if f.init}
    unknown = set(values) - known
    if unknown:
        raise InputDataError(f"Unknown keys in config section [{name}]: {sorted(unknown)}")
    changes = {}
    for key, text in values.items():
        try:
            changes[key] = _parse_value(text, hints[key])
        except (TypeError, ValueError) as e:
            raise InputDataError(f"Bad value for [{name}] {key} = {text!r}: {e}") from e
    try:
        return replace(section, **changes)
    except ValueError as e:
        raise InputDataError(f"Invalid config section [{name}]: {e}") from e


def apply_overrides(
    config: PipelineConfig, overrides: Mapping[str, Mapping[str, str]]
) -> PipelineConfig:
    """
    Override config values given as text

    Args:
        config: Config to start from
        overrides: section -> key -> value, in the INI value syntax

    Returns:
        New config
    """
    sections = {f.name for f in fields(config)}
    changes = {}
    for name, values in overrides.items():
        if name not in sections:
            raise InputDataError(f"Unknown config section [{name}]")
        if values:
            changes[name] = _update_section(getattr(config, name), values, name)
    return replace(config, **changes)


def load_config(path: Optional[Path] = None) -> PipelineConfig:
    """
    Read an INI config on top of the defaults

    Args:
        path: INI file, None for the defaults only

    Returns:
        The config
    """
    config = PipelineConfig()
    if path is None:
        return config
    parser = configparser.ConfigParser(interpolation=None)
    try:
        with open(path, encoding="utf-8") as handle:
            parser.read_file(handle)
    except (OSError, configparser.Error) as e:
        raise InputDataError(f"Cannot read config {path}: {e}") from e
    logger.info("Loaded config from %s", path)
    return apply_overrides(config, {name: dict(parser[name]) for name in parser.sections()})


def config_to_ini(config: PipelineConfig) -> configparser.ConfigParser:
    """Configuration as INI sections that load_config reads back to the same values"""
    parser = configparser.ConfigParser(interpolation=None)
    for section_field in fields(config):
        section = getattr(config, section_field.name)
        parser[section_field.name] = {
            f.name: _format_value(getattr(section, f.name)) for f in fields(section) if f.init
        }
    return parser


def write_config(config: PipelineConfig, path: Path) -> None:
    """Write config as INI; load_config of the file gives back the same config"""
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        config_to_ini(config).write(handle)
    logger.info("Wrote effective config to %s", path)
