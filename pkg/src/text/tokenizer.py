"""
Romanian-aware tokenizer and detokenizer

Token indices are 0-based. Punctuation is always split into one token per character
(so the abbreviation "nr." becomes "nr" + "."), hyphenated clitic clusters such as
"s-a" or "Le-am" stay whole, and digit groups with separators ("1.026") form one numeral.
"""
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Sequence, Tuple

from ..utils.errors import UsageError

# digits with internal separators must not run into letters ("19a" is a word)
_NUMERAL_WITH_SEPARATORS = r"\d+(?:[.,]\d+)+(?!\w)"
_WORD = r"\w+(?:[-'’]\w+)*"
_SINGLE_SYMBOL = r"[^\w\s]"
TOKEN_RE = re.compile(f"{_NUMERAL_WITH_SEPARATORS}|{_WORD}|{_SINGLE_SYMBOL}")
NUMERAL_RE = re.compile(r"\d+(?:[.,]\d+)*")
_WHITESPACE_RE = re.compile(r"\s+")

# no space before these marks, no space after the opening ones
CLOSING_PUNCT = frozenset(".,;:?!)]}»”…%")
OPENING_PUNCT = frozenset("([{«„“")
AMBIGUOUS_QUOTES = frozenset("\"'")

# single-character tokens outside this set ($, +, %, §, ...) are symbols, not punctuation
PUNCTUATION_MARKS = frozenset(".,;:?!…()[]{}«»„“”\"'‘’-–—/")


class TokenKind(str, Enum):
    WORD = "Word"
    PUNCT = "Punct"
    NUMERAL = "Numeral"
    SYMBOL = "Symbol"


@dataclass(frozen=True)
class Token:
    text: str
    kind: TokenKind
    start: int
    end: int

    @property
    def span(self) -> Tuple[int, int]:
        return self.start, self.end

    @property
    def is_word(self) -> bool:
        return self.kind == TokenKind.WORD


@dataclass(frozen=True)
class Sentence:
    raw: str
    tokens: Tuple[Token, ...]

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def texts(self) -> List[str]:
        return [t.text for t in self.tokens]

    @classmethod
    def from_texts(cls, texts: Sequence[str]) -> "Sentence":
        """Lay out token strings with the detokenizer's spacing rules"""
        raw, spans = _layout(texts)
        return cls(raw, tuple(Token(t, classify(t), s, e) for t, (s, e) in zip(texts, spans)))

    @classmethod
    def from_raw_and_texts(cls, raw: str, texts: Sequence[str]) -> "Sentence":
        """
        Rebuild a sentence from its raw text and an already known token list

        Raises:
            UsageError: if the tokens cannot be located in order inside raw
        """
        tokens = []
        cursor = 0
        for text in texts:
            start = raw.find(text, cursor)
            if start < 0 or raw[cursor:start].strip():
                raise UsageError(f"token '{text}' not found at offset {cursor} of '{raw}'")
            tokens.append(Token(text, classify(text), start, start + len(text)))
            cursor = start + len(text)
        if raw[cursor:].strip():
            raise UsageError(f"untokenized trailing text in '{raw}'")
        return cls(raw, tuple(tokens))


def classify(text: str) -> TokenKind:
    if NUMERAL_RE.fullmatch(text):
        return TokenKind.NUMERAL
    if TOKEN_RE.fullmatch(text) and re.match(r"\w", text):
        return TokenKind.WORD
    if all(c in PUNCTUATION_MARKS for c in text):
        return TokenKind.PUNCT
    return TokenKind.SYMBOL


def normalize_whitespace(text: str) -> str:
    return _WHITESPACE_RE.sub(" ", text).strip()


def tokenize(text: str) -> Sentence:
    """
    Split text into word, punctuation and numeral tokens with character spans

    Args:
        text: Any Unicode string; empty or blank input yields no tokens

    Returns:
        Sentence keeping the original text untouched
    """
    tokens = []
    for match in TOKEN_RE.finditer(text):
        value = match.group(0)
        tokens.append(Token(value, classify(value), match.start(), match.end()))
    return Sentence(text, tuple(tokens))


def detokenize(tokens: Iterable) -> str:
    """Join tokens (Token objects or plain strings) back into text"""
    texts = [t.text if isinstance(t, Token) else str(t) for t in tokens]
    return _layout(texts)[0]


def _layout(texts: Sequence[str]) -> Tuple[str, List[Tuple[int, int]]]:
    parts: List[str] = []
    spans: List[Tuple[int, int]] = []
    length = 0
    glue_next = False
    open_quotes = {q: False for q in AMBIGUOUS_QUOTES}

    for text in texts:
        if not text:
            raise UsageError("tokens must be non-empty strings")
        opening = text in OPENING_PUNCT
        closing = text in CLOSING_PUNCT
        if text in AMBIGUOUS_QUOTES:
            closing = open_quotes[text]
            opening = not closing
            open_quotes[text] = not open_quotes[text]

        if parts and not glue_next and not closing:
            parts.append(" ")
            length += 1
        spans.append((length, length + len(text)))
        parts.append(text)
        length += len(text)
        glue_next = opening

    return "".join(parts), spans
