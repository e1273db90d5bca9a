from .error_taxonomy import (
    CONFUSION_CODES,
    NOISE_CODES,
    OK_TAG,
    ErrorPlan,
    ErrorType,
    Method,
    Taxonomy,
    default_taxonomy,
    plan_errors,
    taxonomy,
    validate_shares,
)
