"""
JSONL serialization of parallel examples
"""
import json
import logging
import os
from typing import Dict, Iterable, Iterator, List, Tuple

from ..text.parallel_example import ParallelExample
from ..text.tags import TagSequence
from ..text.tokenizer import Sentence, tokenize
from ..utils.errors import DatasetReadError, UsageError

logger = logging.getLogger(__name__)

REQUIRED_FIELDS = ("id", "source_corpus", "correct", "erroneous", "tags", "injected", "seed")


def example_to_record(example: ParallelExample) -> Dict:
    record = {
        "id": example.id,
        "source_corpus": example.source_corpus,
        "correct": example.correct.raw,
        "erroneous": example.erroneous.raw,
        "correct_tokens": example.correct.texts,
        "erroneous_tokens": example.erroneous.texts,
        "tags": list(example.tags),
        "tags_string": example.tags.as_string(),
        "injected": list(example.injected),
        "seed": example.seed,
    }
    if example.planned is not None:
        record["planned"] = example.planned
    if example.method is not None:
        record["method"] = example.method
    return record


def _sentence(raw: str, tokens) -> Sentence:
    if tokens is None:
        return tokenize(raw)
    return Sentence.from_raw_and_texts(raw, tokens)


def example_from_record(record: Dict) -> ParallelExample:
    missing = [name for name in REQUIRED_FIELDS if name not in record]
    if missing:
        raise UsageError(f"missing fields {missing}")
    tags = record["tags"]
    if isinstance(tags, str):
        tags = tags.split()
    return ParallelExample(
        id=str(record["id"]),
        source_corpus=str(record["source_corpus"]),
        correct=_sentence(record["correct"], record.get("correct_tokens")),
        erroneous=_sentence(record["erroneous"], record.get("erroneous_tokens")),
        tags=TagSequence.of(tags),
        injected=tuple(record["injected"]),
        seed=int(record["seed"]),
        planned=record.get("planned"),
        method=record.get("method"),
    )


def write_examples(examples: Iterable[ParallelExample], path: str) -> int:
    """Write examples one JSON object per line; returns how many were written"""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    count = 0
    with open(path, "w", encoding="utf-8") as f:
        for example in examples:
            f.write(json.dumps(example_to_record(example), ensure_ascii=False) + "\n")
            count += 1
    logger.info("wrote %d examples to %s", count, path)
    return count


def iter_records(path: str) -> Iterator[Tuple[int, Dict]]:
    with open(path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except ValueError as e:
                raise DatasetReadError(f"invalid JSON: {e}", line_number)
            if not isinstance(record, dict):
                raise DatasetReadError("record is not an object", line_number)
            yield line_number, record


def read_examples(path: str) -> Iterator[ParallelExample]:
    """
    Stream examples back from a JSONL file

    Raises:
        DatasetReadError: malformed or truncated line, naming its line number
    """
    for line_number, record in iter_records(path):
        try:
            yield example_from_record(record)
        except (UsageError, KeyError, TypeError, ValueError) as e:
            raise DatasetReadError(str(e), line_number)


def audit_file(path: str) -> List[Tuple[int, str, List[str]]]:
    """
    Re-check every example invariant in a dataset file

    Returns:
        (line number, example id, violations) for each offending line; a line that
        cannot be decoded is reported with id "?"
    """
    problems = []
    with open(path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                example = example_from_record(json.loads(line))
            except (ValueError, KeyError, TypeError, UsageError) as e:
                problems.append((line_number, "?", [f"unreadable record: {e}"]))
                continue
            violations = example.violations()
            if violations:
                problems.append((line_number, example.id, violations))
    return problems
