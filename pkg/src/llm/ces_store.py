"""
Corruption example sets (CES): per-error pools of (correct, erroneous) pairs feeding two-shot prompts
"""
import json
import logging
import os
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from ..taxonomy.error_taxonomy import ErrorType, Method, Taxonomy, default_taxonomy
from ..text.alignment import diff_tags
from ..text.tags import TagSequence
from ..text.tokenizer import normalize_whitespace, tokenize
from ..utils.errors import DatasetReadError, InsufficientExamplesError, UsageError

logger = logging.getLogger(__name__)


class Origin(str, Enum):
    SEED_BOOK = "SeedBook"
    LLM_GENERATED = "LlmGenerated"


@dataclass(frozen=True)
class CesEntry:
    erroneous: str
    correct: str
    tags: TagSequence
    origin: Origin = Origin.SEED_BOOK

    def __post_init__(self):
        if normalize_whitespace(self.erroneous) == normalize_whitespace(self.correct):
            raise UsageError("CES entry: erroneous and correct sentences are identical")
        if not self.tags.has_errors():
            raise UsageError("CES entry: tag sequence has no error tag")
        if len(self.tags) != len(tokenize(self.erroneous).tokens):
            raise UsageError(f"CES entry: {len(self.tags)} tags for "
                             f"{len(tokenize(self.erroneous).tokens)} erroneous tokens")

    def to_dict(self) -> Dict:
        return {
            "correct": self.correct,
            "erroneous": self.erroneous,
            "tags": list(self.tags),
            "origin": self.origin.value,
        }


@dataclass
class CorruptionExampleSet:
    """
    Pool for one two-shot error type

    Grows only through `add`, which refuses entries once the pool holds twice its
    seed size.
    """
    error_type: ErrorType
    entries: List[CesEntry] = field(default_factory=list)
    initial_size: int = 0
    warnings: List[str] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def capacity(self) -> int:
        return 2 * self.initial_size

    @property
    def is_full(self) -> bool:
        return len(self.entries) >= self.capacity

    def add(self, entry: CesEntry) -> bool:
        if self.is_full:
            return False
        if any(e.correct == entry.correct and e.erroneous == entry.erroneous for e in self.entries):
            logger.debug("CES %s: duplicate entry skipped", self.error_type.code)
            return False
        if entry.tags.error_types() != [self.error_type.code]:
            raise UsageError(f"CES {self.error_type.code}: entry tagged {entry.tags.error_types()}")
        self.entries.append(entry)
        return True

    def remove(self, entry: CesEntry) -> None:
        if entry.origin == Origin.SEED_BOOK:
            raise UsageError("seed entries cannot be removed from a CES")
        self.entries.remove(entry)

    def pick_pair(self, rng: np.random.Generator) -> Tuple[CesEntry, CesEntry]:
        """Two distinct entries drawn uniformly, returned in CES order"""
        if len(self.entries) < 2:
            raise InsufficientExamplesError(
                f"CES {self.error_type.code} has {len(self.entries)} entries, two-shot prompting needs 2")
        first, second = sorted(int(i) for i in rng.choice(len(self.entries), size=2, replace=False))
        return self.entries[first], self.entries[second]


def ces_filename(code: str) -> str:
    """File name for an error code, e.g. VERB:SVA -> VERB_SVA.jsonl"""
    return code.replace(":", "_") + ".jsonl"


def entry_from_record(record: Dict, code: str) -> CesEntry:
    correct = normalize_whitespace(record["correct"])
    erroneous = normalize_whitespace(record["erroneous"])
    if record.get("tags"):
        tags = TagSequence.of(record["tags"])
    else:
        tags = diff_tags(tokenize(correct), tokenize(erroneous), code)
    return CesEntry(erroneous, correct, tags, Origin(record.get("origin", Origin.SEED_BOOK.value)))


def load_ces(path: str, error_type: ErrorType) -> CorruptionExampleSet:
    """
    Read a CES from JSONL; the initial size is the number of seed entries

    Records without tags get them by aligning the two sentences.

    Raises:
        DatasetReadError: malformed record, naming its line
    """
    if error_type.method != Method.TWO_SHOT_LLM:
        logger.warning("loading a CES for %s, which is not generated by two-shot prompting", error_type.code)
    ces = CorruptionExampleSet(error_type)
    with open(path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                entry = entry_from_record(json.loads(line), error_type.code)
            except (ValueError, KeyError, TypeError, UsageError) as e:
                raise DatasetReadError(f"{path}: {e}", line_number)
            if entry.tags.error_types() != [error_type.code]:
                raise DatasetReadError(f"{path}: entry tagged {entry.tags.error_types()}, "
                                       f"expected only {error_type.code}", line_number)
            ces.entries.append(entry)
    ces.initial_size = sum(1 for e in ces.entries if e.origin == Origin.SEED_BOOK)
    logger.info("CES %s: %d entries (%d seed) from %s",
                error_type.code, len(ces), ces.initial_size, path)
    return ces


def save_ces(ces: CorruptionExampleSet, path: str) -> None:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        for entry in ces.entries:
            f.write(json.dumps(entry.to_dict(), ensure_ascii=False) + "\n")


def load_ces_directory(directory: str,
                       error_taxonomy: Optional[Taxonomy] = None,
                       codes: Optional[Iterable[str]] = None) -> Dict[str, CorruptionExampleSet]:
    """Load every two-shot CES file found in a directory, keyed by error code"""
    error_taxonomy = error_taxonomy or default_taxonomy()
    wanted = list(codes) if codes is not None else [e.code for e in error_taxonomy.by_method(Method.TWO_SHOT_LLM)]
    sets = {}
    for code in wanted:
        path = os.path.join(directory, ces_filename(code))
        if not os.path.exists(path):
            logger.warning("no CES file for %s in %s", code, directory)
            continue
        sets[code] = load_ces(path, error_taxonomy.get(code))
    return sets
