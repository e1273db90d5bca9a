"""
Clean corpus input: one sentence per line, optionally prefixed with `LABEL<TAB>`
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List

from ..text.tokenizer import normalize_whitespace
from ..utils.errors import DatasetReadError
from ..utils.seeding import stable_hash

logger = logging.getLogger(__name__)

DEFAULT_SOURCE_LABEL = "MARCELL-RO"


@dataclass(frozen=True)
class CorpusSentence:
    source_corpus: str
    index: int
    text: str

    @property
    def example_id(self) -> str:
        return example_id(self.source_corpus, self.index)


def example_id(source_corpus: str, index: int) -> str:
    """Stable id derived from the source corpus label and the sentence position inside it"""
    return stable_hash([source_corpus, index])[:16]


def parse_corpus_lines(lines: Iterable[str], default_label: str = DEFAULT_SOURCE_LABEL) -> List[CorpusSentence]:
    sentences: List[CorpusSentence] = []
    counters: Dict[str, int] = {}
    for line_number, line in enumerate(lines, start=1):
        line = line.rstrip("\n")
        if not line.strip():
            continue
        label, text = default_label, line
        if "\t" in line:
            label, text = line.split("\t", 1)
            label = label.strip()
            if not label:
                raise DatasetReadError("empty source label before tab", line_number)
        text = normalize_whitespace(text)
        if not text:
            logger.debug("line %d: label without sentence skipped", line_number)
            continue
        index = counters.get(label, 0)
        counters[label] = index + 1
        sentences.append(CorpusSentence(label, index, text))
    return sentences


def read_corpus(path: str, default_label: str = DEFAULT_SOURCE_LABEL) -> List[CorpusSentence]:
    with open(path, "r", encoding="utf-8") as f:
        sentences = parse_corpus_lines(f, default_label)
    logger.info("read %d sentences from %s", len(sentences), path)
    return sentences
