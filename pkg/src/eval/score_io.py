"""
Readers for prediction / gold files fed to the scorers
"""
import json
from typing import List

from ..text.tags import TagSequence
from ..text.tokenizer import Sentence, tokenize
from ..utils.errors import DatasetReadError


def read_tag_sequences(path: str) -> List[TagSequence]:
    """
    One tag sequence per line, whitespace separated; `.jsonl` files are read as dataset
    records and their `tags` field is used
    """
    sequences = []
    with open(path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            if path.endswith(".jsonl"):
                if not line.strip():
                    continue
                try:
                    tags = json.loads(line)["tags"]
                except (ValueError, KeyError, TypeError) as e:
                    raise DatasetReadError(f"{path}: no tags in record: {e}", line_number)
                sequences.append(TagSequence.of(tags.split() if isinstance(tags, str) else tags))
            else:
                sequences.append(TagSequence.from_string(line))
    return sequences


def read_sentences(path: str) -> List[Sentence]:
    """One sentence per line, tokenized; blank lines stay as empty sentences"""
    with open(path, "r", encoding="utf-8") as f:
        return [tokenize(line.rstrip("\n")) for line in f]
