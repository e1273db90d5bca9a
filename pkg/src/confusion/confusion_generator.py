"""
Confusion-list engine: routes CONJ/DET/PREP/PRON sentences to function-word substitution
and PUNCT sentences to the punctuation matrix
"""
import logging
import os
from typing import Mapping, Optional, Tuple

import numpy as np
import yaml

from ..text.tags import TagSequence
from ..text.tokenizer import Sentence
from ..utils.errors import ConfigurationError
from .confusion_lists import DEFAULT_LISTS, DEFAULT_SUBSTITUTION_PROBABILITY, ConfusionLists, corrupt_function_words
from .punct_matrix import DEFAULT_SYMBOLS, DEFAULT_TRANSITIONS, PunctMatrix, corrupt_punctuation

logger = logging.getLogger(__name__)


def confusion_from_section(section: Optional[Mapping]) -> Tuple[ConfusionLists, PunctMatrix]:
    """Build validated lists and matrix from a `confusion` config section, defaults filling the gaps"""
    section = section or {}
    if not isinstance(section, Mapping):
        raise ConfigurationError("confusion section must be a mapping", key="confusion")

    user_lists = section.get("lists") or {}
    if not isinstance(user_lists, Mapping):
        raise ConfigurationError("confusion.lists must be a mapping", key="confusion.lists")
    lists = dict(DEFAULT_LISTS)
    for code, words in user_lists.items():
        if code not in DEFAULT_LISTS:
            raise ConfigurationError(f"confusion.lists: unknown error type '{code}'", key=f"confusion.lists.{code}")
        if not words:
            raise ConfigurationError(f"confusion.lists.{code} is empty", key=f"confusion.lists.{code}")
        lists[code] = tuple(words)

    matrix_section = section.get("punct_matrix")
    if matrix_section:
        try:
            symbols = tuple(matrix_section["symbols"])
            rows = tuple(tuple(float(p) for p in row) for row in matrix_section["rows"])
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigurationError(f"confusion.punct_matrix needs 'symbols' and 'rows': {e}",
                                     key="confusion.punct_matrix")
        matrix = PunctMatrix(symbols, rows)
    else:
        matrix = PunctMatrix.from_transitions(DEFAULT_TRANSITIONS, DEFAULT_SYMBOLS)

    return ConfusionLists(lists), matrix


def load_confusion_config(path) -> Tuple[ConfusionLists, PunctMatrix]:
    """
    Load confusion lists and the punctuation matrix from a YAML file

    The file may be the full toolkit config (lists under `confusion:`) or contain the
    `lists` / `punct_matrix` keys at top level. Omitted lists fall back to built-ins.
    """
    if not os.path.exists(path):
        raise ConfigurationError(f"confusion config not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigurationError(f"cannot parse {path}: {e}")
    section = data.get("confusion", data) if isinstance(data, Mapping) else None
    return confusion_from_section(section)


class ConfusionGenerator:
    """Applies the confusion-list method for one planned error type per sentence"""

    def __init__(self,
                 lists: Optional[ConfusionLists] = None,
                 matrix: Optional[PunctMatrix] = None,
                 probability: float = DEFAULT_SUBSTITUTION_PROBABILITY):
        self.lists = lists or ConfusionLists()
        self.matrix = matrix or PunctMatrix.default()
        self.probability = probability

    def corrupt(self, sentence: Sentence, error_code: str,
                rng: np.random.Generator) -> Tuple[Sentence, TagSequence]:
        if error_code == "PUNCT":
            return corrupt_punctuation(sentence, self.matrix, rng)
        if error_code not in self.lists.lists:
            raise ConfigurationError(f"no confusion list for error type '{error_code}'")
        return corrupt_function_words(sentence, self.lists, self.probability, rng, only={error_code})
