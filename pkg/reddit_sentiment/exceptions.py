"""Exceptions raised by the pipeline"""


class PipelineError(Exception):
    """Base class for every error the pipeline raises on purpose"""


class InputDataError(PipelineError):
    """Missing, unreadable or malformed input (files, config, arguments)"""


class LexiconError(InputDataError):
    """A sentiment lexicon is empty or malformed"""


class CoverageError(InputDataError):
    """Two label sources do not cover the same set of message ids"""

    def __init__(self, only_first: set, only_second: set, what: str = "label sets"):
        self.only_first = set(only_first)
        self.only_second = set(only_second)
        difference = sorted(self.only_first | self.only_second)
        super().__init__(
            f"{what} cover different messages; symmetric difference "
            f"({len(difference)} ids): {', '.join(map(str, difference[:20]))}"
            + (" ..." if len(difference) > 20 else "")
        )


class InsufficientMessagesError(InputDataError):
    """Fewer messages pass a sampling filter than were requested"""

    def __init__(self, requested: int, available: int):
        self.requested = requested
        self.available = available
        super().__init__(
            f"requested {requested} messages but only {available} are available"
        )


class EmptyVocabularyError(PipelineError, ValueError):
    """Minimum word frequency pruning left no terms"""

    def __init__(self, min_freq: int):
        self.min_freq = min_freq
        super().__init__(f"vocabulary is empty after pruning with min_freq={min_freq}")
