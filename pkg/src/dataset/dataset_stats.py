"""
Dataset composition statistics (sentences, tokens, erroneous tokens, error types)
"""
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional

import pandas as pd

from ..taxonomy.error_taxonomy import OK_TAG
from ..text.alignment import EQUAL, INSERT, align
from ..text.parallel_example import ParallelExample
from ..text.tokenizer import TokenKind

TOTAL_LABEL = "Total"


@dataclass
class CorpusStats:
    sentence_count: int = 0
    token_count: int = 0
    erroneous_token_count: int = 0
    type_counts: Counter = field(default_factory=Counter)

    @property
    def error_rate(self) -> float:
        return self.erroneous_token_count / self.token_count if self.token_count else 0.0

    def type_shares(self) -> Dict[str, float]:
        total = sum(self.type_counts.values())
        return {code: count / total for code, count in sorted(self.type_counts.items())} if total else {}

    def add(self, example: ParallelExample) -> None:
        self.sentence_count += 1
        self.token_count += len(example.tags)
        errors = [tag for tag in example.tags if tag != OK_TAG]
        self.erroneous_token_count += len(errors)
        self.type_counts.update(errors)

    def to_dict(self) -> Dict:
        return {
            "sentence_count": self.sentence_count,
            "token_count": self.token_count,
            "erroneous_token_count": self.erroneous_token_count,
            "error_rate": self.error_rate,
            "type_counts": dict(sorted(self.type_counts.items())),
            "type_shares": self.type_shares(),
        }


@dataclass
class DatasetStats:
    per_corpus: Dict[str, CorpusStats]
    total: CorpusStats
    keep_fraction: Optional[float] = None

    def to_frame(self) -> pd.DataFrame:
        """One row per source corpus plus a Total row"""
        rows = {label: stats.to_dict() for label, stats in sorted(self.per_corpus.items())}
        rows[TOTAL_LABEL] = self.total.to_dict()
        frame = pd.DataFrame.from_dict(rows, orient="index")
        frame = frame[["sentence_count", "token_count", "erroneous_token_count", "error_rate"]]
        frame.index.name = "source_corpus"
        return frame

    def type_frame(self) -> pd.DataFrame:
        """Error type token counts and shares over the whole dataset"""
        frame = pd.DataFrame({
            "tokens": pd.Series(dict(self.total.type_counts), dtype="int64"),
            "share": pd.Series(self.total.type_shares(), dtype="float64"),
        })
        frame.index.name = "error_type"
        return frame.sort_values("tokens", ascending=False)

    def to_dict(self) -> Dict:
        return {
            "per_corpus": {label: stats.to_dict() for label, stats in sorted(self.per_corpus.items())},
            "total": self.total.to_dict(),
            "keep_fraction": self.keep_fraction,
        }


def compute_stats(examples: Iterable[ParallelExample]) -> DatasetStats:
    """Count sentences, erroneous-side tokens and non-O tags per source corpus and overall"""
    per_corpus: Dict[str, CorpusStats] = {}
    total = CorpusStats()
    noise_examples = []
    for example in examples:
        per_corpus.setdefault(example.source_corpus, CorpusStats()).add(example)
        total.add(example)
        if example.method == "noise_injection":
            noise_examples.append(example)
    return DatasetStats(per_corpus, total, keep_fraction(noise_examples) if noise_examples else None)


def keep_fraction(examples: Iterable[ParallelExample]) -> float:
    """
    Share of correct-side word tokens that survive untouched in the erroneous sentence

    A word counts as untouched when it aligns to an identical O-tagged token that is
    not directly followed by an inserted token. A stray insertion is an operation on
    the word before it.
    """
    kept = words = 0
    for example in examples:
        correct = example.correct
        ops = align(correct.texts, example.erroneous.texts)
        inserted = {op.tgt for op in ops if op.op == INSERT}
        for op in ops:
            if op.src is None or correct.tokens[op.src].kind != TokenKind.WORD:
                continue
            words += 1
            kept += (op.op == EQUAL and example.tags[op.tgt] == OK_TAG and op.tgt + 1 not in inserted)
    return kept / words if words else 0.0
