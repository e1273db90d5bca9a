from .errors import (
    ConfigurationError,
    DatasetReadError,
    GecToolkitError,
    InsufficientExamplesError,
    LlmClientError,
    LlmParseError,
    ScoringError,
    SplitError,
    TagValidationError,
    UsageError,
)
from .logging_setup import setup_logging
from .seeding import canonical_json, derive_seed, make_rng, stable_hash
