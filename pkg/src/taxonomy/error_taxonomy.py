"""
Romanian grammatical error taxonomy, target error shares and per-sentence error planning
"""
import logging
import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

import numpy as np

from ..utils.errors import ConfigurationError, UsageError

logger = logging.getLogger(__name__)

OK_TAG = "O"
SHARE_TOLERANCE = 1e-6


class Method(str, Enum):
    NOISE_INJECTION = "noise_injection"
    CONFUSION_LIST = "confusion_list"
    ZERO_SHOT_LLM = "zero_shot_llm"
    TWO_SHOT_LLM = "two_shot_llm"

    @property
    def is_llm(self) -> bool:
        return self in (Method.ZERO_SHOT_LLM, Method.TWO_SHOT_LLM)


@dataclass(frozen=True)
class ErrorType:
    code: str
    description: str
    method: Method
    target_share: float

    def __str__(self) -> str:
        return self.code


# code, description, generation method, share among all generated errors
_TABLE = [
    ("ADJ", "Inappropriate choice of adjective for the sentence context", Method.TWO_SHOT_LLM, 0.0422),
    ("ADJ:FORM", "Incorrect degree of an adjective", Method.ZERO_SHOT_LLM, 0.0294),
    ("ADV", "Erroneous adverb usage", Method.TWO_SHOT_LLM, 0.0290),
    ("CONJ", "Erroneous choice of conjunction", Method.CONFUSION_LIST, 0.0286),
    ("DET", "Erroneous choice of determiner", Method.CONFUSION_LIST, 0.0169),
    ("MORPH", "Misuse of words stemming from the same root", Method.TWO_SHOT_LLM, 0.0501),
    ("NOUN", "Inappropriate noun usage", Method.TWO_SHOT_LLM, 0.0255),
    ("NOUN:INFL", "Incorrect inflection form of plural noun", Method.TWO_SHOT_LLM, 0.0134),
    ("NOUN:NUM", "Incorrect number of a noun", Method.TWO_SHOT_LLM, 0.0158),
    ("NOUN:POSS", "Disagreement between noun and possessive article", Method.ZERO_SHOT_LLM, 0.0039),
    ("ORTH", "Incorrect use of whitespace that changes sentence meaning", Method.NOISE_INJECTION, 0.1052),
    ("PREP", "Erroneous choice of preposition", Method.CONFUSION_LIST, 0.0313),
    ("PRON", "Erroneous choice of pronoun", Method.CONFUSION_LIST, 0.0217),
    ("PUNCT", "Inappropriate punctuation", Method.CONFUSION_LIST, 0.1076),
    ("SPELL", "Errors related to word spelling", Method.NOISE_INJECTION, 0.2555),
    ("VERB", "Inappropriate choice of verb for the sentence context", Method.TWO_SHOT_LLM, 0.0072),
    ("VERB:FORM", "Erroneous choice of form in a verb", Method.TWO_SHOT_LLM, 0.0057),
    ("VERB:SVA", "Disagreement between subject and verb in a sentence", Method.TWO_SHOT_LLM, 0.0021),
    ("VERB:TENSE", "Difference in tense between verb and rest of phrase", Method.TWO_SHOT_LLM, 0.0038),
    ("WO", "Incorrect word order", Method.NOISE_INJECTION, 0.2051),
]

# The confusion engine only knows how to produce these codes
CONFUSION_CODES = frozenset({"CONJ", "DET", "PREP", "PRON", "PUNCT"})
NOISE_CODES = frozenset({"ORTH", "SPELL", "WO"})

ShareKey = Union[str, ErrorType]


class Taxonomy:
    """Immutable view over the 20 error types, optionally with overridden shares and methods"""

    def __init__(self, entries: Iterable[ErrorType]):
        self._entries: Tuple[ErrorType, ...] = tuple(entries)
        self._by_code: Dict[str, ErrorType] = {e.code: e for e in self._entries}
        if len(self._by_code) != len(self._entries):
            raise ConfigurationError("duplicate error codes in taxonomy")

    @classmethod
    def default(cls) -> "Taxonomy":
        return cls(ErrorType(code, desc, method, share) for code, desc, method, share in _TABLE)

    def __iter__(self):
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, code: ShareKey) -> bool:
        return _code_of(code) in self._by_code

    def get(self, code: ShareKey) -> ErrorType:
        try:
            return self._by_code[_code_of(code)]
        except KeyError:
            raise ConfigurationError(f"unknown error type '{_code_of(code)}'", key=_code_of(code))

    def codes(self) -> List[str]:
        return [e.code for e in self._entries]

    def shares(self) -> Dict[str, float]:
        return {e.code: e.target_share for e in self._entries}

    def by_method(self, method: Method) -> List[ErrorType]:
        return [e for e in self._entries if e.method == method]

    def with_overrides(self,
                       shares: Optional[Mapping[ShareKey, float]] = None,
                       methods: Optional[Mapping[ShareKey, Union[str, Method]]] = None) -> "Taxonomy":
        """
        Build a new taxonomy with some shares and/or generation methods replaced

        Args:
            shares: code -> share; codes not listed keep their Table share
            methods: code -> method name

        Returns:
            New Taxonomy; the receiver is left untouched
        """
        shares = {_code_of(k): float(v) for k, v in (shares or {}).items()}
        methods = {_code_of(k): v for k, v in (methods or {}).items()}
        for code in list(shares) + list(methods):
            if code not in self._by_code:
                raise ConfigurationError(f"unknown error type '{code}'", key=code)

        entries = []
        for entry in self._entries:
            updated = entry
            if entry.code in shares:
                updated = replace(updated, target_share=shares[entry.code])
            if entry.code in methods:
                updated = replace(updated, method=_parse_method(methods[entry.code], entry.code))
            entries.append(updated)

        result = Taxonomy(entries)
        validate_shares(result.shares())
        for entry in result:
            if entry.method == Method.CONFUSION_LIST and entry.code not in CONFUSION_CODES:
                raise ConfigurationError(
                    f"method.{entry.code}: confusion lists only produce {sorted(CONFUSION_CODES)}",
                    key=f"method.{entry.code}")
        return result


def _code_of(key: ShareKey) -> str:
    return key.code if isinstance(key, ErrorType) else str(key)


def _parse_method(value: Union[str, Method], code: str) -> Method:
    if isinstance(value, Method):
        return value
    try:
        return Method(str(value).strip().lower())
    except ValueError:
        choices = ", ".join(m.value for m in Method)
        raise ConfigurationError(f"method.{code}: '{value}' is not one of {choices}", key=f"method.{code}")


_DEFAULT = Taxonomy.default()


def taxonomy() -> List[ErrorType]:
    """Return the 20 error types with their Table shares and generation methods"""
    return list(_DEFAULT)


def default_taxonomy() -> Taxonomy:
    return _DEFAULT


def validate_shares(shares: Mapping[ShareKey, float]) -> Dict[str, float]:
    """Check a share map and return it keyed by code"""
    normalized = {_code_of(k): float(v) for k, v in shares.items()}
    if not normalized:
        raise ConfigurationError("no error shares given", key="shares")
    for code, value in normalized.items():
        if value < 0 or math.isnan(value):
            raise ConfigurationError(f"shares.{code} must be non-negative, got {value}", key=f"shares.{code}")
    total = sum(normalized.values())
    if abs(total - 1.0) > SHARE_TOLERANCE:
        raise ConfigurationError(f"error shares must sum to 1, got {total:.6f}", key="shares")
    return normalized


@dataclass(frozen=True)
class ErrorPlan:
    """One planned error type per input sentence"""
    assignments: Tuple[ErrorType, ...]

    def __len__(self) -> int:
        return len(self.assignments)

    def __getitem__(self, index: int) -> ErrorType:
        return self.assignments[index]

    def __iter__(self):
        return iter(self.assignments)

    def counts(self) -> Dict[str, int]:
        counts: Dict[str, int] = {}
        for error in self.assignments:
            counts[error.code] = counts.get(error.code, 0) + 1
        return counts

    def codes(self) -> List[str]:
        return [e.code for e in self.assignments]


def plan_errors(n_sentences: int,
                shares: Mapping[ShareKey, float],
                seed: int,
                error_taxonomy: Optional[Taxonomy] = None) -> ErrorPlan:
    """
    Assign one error type to each of n sentences

    Quotas come from largest-remainder rounding of n * share, so realized counts differ
    from the expectation by less than one sentence per type; the order is then shuffled
    with a generator seeded by `seed`.

    Args:
        n_sentences: Number of sentences to plan
        shares: Error type (or code) -> fraction, summing to 1
        seed: Shuffle seed
        error_taxonomy: Taxonomy used to resolve codes (default: Table taxonomy)

    Returns:
        ErrorPlan of length n_sentences
    """
    if n_sentences < 1:
        raise UsageError(f"n_sentences must be at least 1, got {n_sentences}")
    error_taxonomy = error_taxonomy or _DEFAULT
    normalized = validate_shares(shares)

    # taxonomy order keeps tie-breaking independent of dict ordering
    order = [code for code in error_taxonomy.codes() if code in normalized]
    unknown = set(normalized) - set(order)
    if unknown:
        raise ConfigurationError(f"unknown error types in shares: {sorted(unknown)}", key="shares")

    exact = [n_sentences * normalized[code] for code in order]
    quotas = [int(math.floor(x)) for x in exact]
    remaining = n_sentences - sum(quotas)
    by_remainder = sorted(range(len(order)), key=lambda i: (-(exact[i] - quotas[i]), i))
    for i in by_remainder[:max(remaining, 0)]:
        quotas[i] += 1
    # shares summing a hair above 1 can overshoot by one sentence
    for i in reversed(by_remainder):
        if remaining >= 0:
            break
        if quotas[i] > 0:
            quotas[i] -= 1
            remaining += 1

    assignments: List[ErrorType] = []
    for code, quota in zip(order, quotas):
        assignments.extend([error_taxonomy.get(code)] * quota)

    rng = np.random.default_rng(seed)
    permutation = rng.permutation(len(assignments))
    plan = ErrorPlan(tuple(assignments[i] for i in permutation))
    logger.debug("planned %d sentences over %d error types (seed=%d)", n_sentences, len(order), seed)
    return plan
