"""
Closed-class function-word confusion lists (CONJ, DET, PREP, PRON) and substitution
"""
import logging
from dataclasses import dataclass, field
from typing import Collection, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..taxonomy.error_taxonomy import OK_TAG
from ..text.tags import TagSequence
from ..text.tokenizer import Sentence
from ..utils.errors import ConfigurationError

logger = logging.getLogger(__name__)

# a token found in several lists is attributed to the first list in this order
LIST_PRIORITY = ("PREP", "CONJ", "PRON", "DET")
DEFAULT_SUBSTITUTION_PROBABILITY = 0.3

DEFAULT_LISTS: Dict[str, Tuple[str, ...]] = {
    "PREP": (
        "la", "în", "către", "contrar", "fără", "după", "cu", "lângă", "asupra", "de", "de la",
        "despre", "dimprejurul", "din", "dinaintea", "înspre", "între", "înăuntrul", "împotriva",
        "împrejurul", "înaintea", "înapoia", "întru", "dedesubtul", "datorită", "printre", "prin",
        "primprejur", "peste", "pentru", "pe", "până", "via", "spre", "sub",
    ),
    "CONJ": (
        "și", "sau", "ori", "dar", "iar", "însă", "ci", "deci", "că", "să", "dacă", "deși",
        "fiindcă", "deoarece", "încât", "căci", "nici", "ca", "precum", "întrucât", "or",
    ),
    "PRON": (
        "eu", "tu", "el", "ea", "noi", "voi", "ei", "ele", "mie", "ție", "lui", "nouă", "vouă",
        "lor", "mă", "te", "îl", "o", "ne", "vă", "îi", "le", "își", "se", "însuși", "însăși",
        "înșiși", "însele", "însumi", "însuți", "care", "cine", "cărui", "cărei", "căror",
        "acesta", "aceasta", "aceștia", "acestea", "acela", "aceea", "aceia", "acelea",
    ),
    "DET": (
        "un", "unui", "unei", "unor", "niște", "cel", "cea", "cei", "cele", "celui", "celei",
        "celor", "al", "a", "ai", "ale", "acest", "această", "acești", "aceste", "acel", "acea",
        "acei", "acele", "fiecare", "orice", "vreun", "vreo",
    ),
}


@dataclass(frozen=True)
class ConfusionLists:
    lists: Mapping[str, Tuple[str, ...]] = field(default_factory=lambda: dict(DEFAULT_LISTS))

    def __post_init__(self):
        cleaned = {}
        for code, words in self.lists.items():
            if code not in LIST_PRIORITY:
                raise ConfigurationError(f"confusion.lists: unknown error type '{code}'",
                                         key=f"confusion.lists.{code}")
            unique = _dedupe(w.strip().lower() for w in words if w and w.strip())
            if not unique:
                raise ConfigurationError(f"confusion.lists.{code} is empty", key=f"confusion.lists.{code}")
            if len(unique) != len(words):
                logger.warning("confusion list %s: dropped %d duplicate/blank entries",
                               code, len(words) - len(unique))
            cleaned[code] = unique
        object.__setattr__(self, "lists", cleaned)
        lookup = {}
        for code in reversed(LIST_PRIORITY):
            for word in cleaned.get(code, ()):
                lookup[word] = code
        object.__setattr__(self, "_lookup", lookup)

    def lookup(self, word: str) -> Optional[str]:
        """Error type owning this word, after priority resolution"""
        return self._lookup.get(word.lower())

    def candidates(self, code: str, exclude: str) -> List[str]:
        """Single-token list members other than the given word"""
        exclude = exclude.lower()
        return [w for w in self.lists[code] if w != exclude and " " not in w]


def _dedupe(words) -> Tuple[str, ...]:
    seen = []
    for word in words:
        if word not in seen:
            seen.append(word)
    return tuple(seen)


def _match_case(replacement: str, original: str) -> str:
    if original.isupper() and len(original) > 1:
        return replacement.upper()
    if original[:1].isupper():
        return replacement[:1].upper() + replacement[1:]
    return replacement


def corrupt_function_words(sentence: Sentence,
                           lists: ConfusionLists,
                           p: float,
                           rng: np.random.Generator,
                           only: Optional[Collection[str]] = None) -> Tuple[Sentence, TagSequence]:
    """
    Substitute closed-class words with another member of their list

    Args:
        sentence: Clean sentence
        lists: Confusion lists
        p: Per-token substitution probability
        rng: Seeded generator
        only: Restrict substitution to these error types (default: all lists)

    Returns:
        (erroneous sentence, tags); the token count never changes
    """
    if not 0.0 <= p <= 1.0:
        raise ConfigurationError(f"confusion.probability must lie in [0, 1], got {p}",
                                 key="confusion.probability")
    texts: List[str] = []
    tags: List[str] = []
    for token in sentence.tokens:
        code = lists.lookup(token.text)
        if code is None or (only is not None and code not in only):
            texts.append(token.text)
            tags.append(OK_TAG)
            continue
        if rng.random() >= p:
            texts.append(token.text)
            tags.append(OK_TAG)
            continue
        pool = lists.candidates(code, token.text)
        if not pool:
            texts.append(token.text)
            tags.append(OK_TAG)
            continue
        replacement = _match_case(pool[int(rng.integers(len(pool)))], token.text)
        texts.append(replacement)
        tags.append(code)
    return _rebuild(sentence, texts), TagSequence(tuple(tags))


def _rebuild(sentence: Sentence, texts: Sequence[str]) -> Sentence:
    if texts == sentence.texts:
        return sentence
    return Sentence.from_texts(texts)
