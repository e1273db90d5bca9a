"""
Exception hierarchy shared by every toolkit component
"""
from typing import Optional


class GecToolkitError(Exception):
    """Base class for all toolkit errors"""


class ConfigurationError(GecToolkitError):
    """Invalid or inconsistent configuration value"""

    def __init__(self, message: str, key: Optional[str] = None):
        super().__init__(message)
        self.key = key


class UsageError(GecToolkitError):
    """An operation was called with arguments outside its contract"""


class TagValidationError(GecToolkitError):
    """A tag index list does not fit the sentence it annotates"""

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index


class InsufficientExamplesError(GecToolkitError):
    """A corruption example set is too small for a two-shot prompt"""


class LlmParseError(GecToolkitError):
    """An LLM answer could not be parsed; keeps the raw text for diagnostics"""

    def __init__(self, message: str, raw_text: str):
        super().__init__(message)
        self.raw_text = raw_text


class LlmClientError(GecToolkitError):
    """Transport-level failure talking to an LLM backend"""


class DatasetReadError(GecToolkitError):
    """Malformed record in a dataset or CES file"""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class SplitError(GecToolkitError):
    """Not enough examples to honor a train/test split request"""

    def __init__(self, message: str, shortfall: int):
        super().__init__(message)
        self.shortfall = shortfall


class ScoringError(GecToolkitError):
    """Prediction and gold data cannot be compared"""

    def __init__(self, message: str, example_index: Optional[int] = None):
        super().__init__(message)
        self.example_index = example_index
