"""
Punctuation transition matrix and PUNCT error generation
"""
from dataclasses import dataclass
from typing import Dict, List, Mapping, Sequence, Tuple

import numpy as np

from ..taxonomy.error_taxonomy import OK_TAG
from ..text.tags import TagSequence
from ..text.tokenizer import Sentence, TokenKind
from ..utils.errors import ConfigurationError

ROW_TOLERANCE = 1e-9

DEFAULT_SYMBOLS = (".", ",", ";", ":", "?", "!")
# row symbol -> {target symbol: probability}; unlisted targets have probability 0
DEFAULT_TRANSITIONS: Dict[str, Dict[str, float]] = {
    ".": {".": 0.85, ",": 0.05, ";": 0.04, "!": 0.03, "?": 0.03},
    ",": {",": 0.75, ".": 0.10, ";": 0.10, ":": 0.05},
    ";": {";": 0.75, ",": 0.25},
    ":": {":": 0.80, ";": 0.10, ",": 0.05, ".": 0.05},
    "?": {"?": 0.85, ".": 0.10, "!": 0.05},
    "!": {"!": 0.85, ".": 0.10, "?": 0.05},
}


@dataclass(frozen=True)
class PunctMatrix:
    symbols: Tuple[str, ...]
    rows: Tuple[Tuple[float, ...], ...]

    def __post_init__(self):
        if len(set(self.symbols)) != len(self.symbols):
            raise ConfigurationError("confusion.punct_matrix: duplicate symbols", key="confusion.punct_matrix")
        if len(self.rows) != len(self.symbols):
            raise ConfigurationError(
                f"confusion.punct_matrix: {len(self.rows)} rows for {len(self.symbols)} symbols",
                key="confusion.punct_matrix")
        for symbol, row in zip(self.symbols, self.rows):
            if len(row) != len(self.symbols):
                raise ConfigurationError(f"punctuation row '{symbol}' has {len(row)} entries, "
                                         f"expected {len(self.symbols)}", key="confusion.punct_matrix")
            if any(p < 0 for p in row):
                raise ConfigurationError(f"punctuation row '{symbol}' has negative entries",
                                         key="confusion.punct_matrix")
            if abs(sum(row) - 1.0) > ROW_TOLERANCE:
                raise ConfigurationError(f"punctuation row '{symbol}' sums to {sum(row):.6f}, not 1",
                                         key="confusion.punct_matrix")

    @classmethod
    def from_transitions(cls, transitions: Mapping[str, Mapping[str, float]],
                         symbols: Sequence[str] = None) -> "PunctMatrix":
        symbols = tuple(symbols or transitions.keys())
        rows = []
        for symbol in symbols:
            targets = transitions.get(symbol, {symbol: 1.0})
            unknown = set(targets) - set(symbols)
            if unknown:
                raise ConfigurationError(f"punctuation row '{symbol}' targets unknown symbols {sorted(unknown)}",
                                         key="confusion.punct_matrix")
            rows.append(tuple(float(targets.get(target, 0.0)) for target in symbols))
        return cls(symbols, tuple(rows))

    @classmethod
    def default(cls) -> "PunctMatrix":
        return cls.from_transitions(DEFAULT_TRANSITIONS, DEFAULT_SYMBOLS)

    @classmethod
    def identity(cls, symbols: Sequence[str] = DEFAULT_SYMBOLS) -> "PunctMatrix":
        return cls.from_transitions({s: {s: 1.0} for s in symbols}, symbols)

    def probability(self, source: str, target: str) -> float:
        return self.rows[self.symbols.index(source)][self.symbols.index(target)]

    def draw(self, symbol: str, rng: np.random.Generator) -> str:
        row = self.rows[self.symbols.index(symbol)]
        u = rng.random()
        cumulative = 0.0
        for target, p in zip(self.symbols, row):
            cumulative += p
            if u < cumulative:
                return target
        # rounding slack at the top of the row
        return next(t for t, p in zip(reversed(self.symbols), reversed(row)) if p > 0)

    def to_config(self) -> Dict[str, List]:
        return {"symbols": list(self.symbols), "rows": [list(r) for r in self.rows]}


def corrupt_punctuation(sentence: Sentence, matrix: PunctMatrix,
                        rng: np.random.Generator) -> Tuple[Sentence, TagSequence]:
    """
    Redraw every known punctuation mark from its matrix row

    Marks missing from the matrix pass through untouched. Changed marks are tagged PUNCT.
    """
    texts: List[str] = []
    tags: List[str] = []
    known = set(matrix.symbols)
    for token in sentence.tokens:
        if token.kind == TokenKind.PUNCT and token.text in known:
            new = matrix.draw(token.text, rng)
            texts.append(new)
            tags.append("PUNCT" if new != token.text else OK_TAG)
        else:
            texts.append(token.text)
            tags.append(OK_TAG)
    erroneous = sentence if texts == sentence.texts else Sentence.from_texts(texts)
    return erroneous, TagSequence(tuple(tags))
