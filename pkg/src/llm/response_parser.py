"""
Parsing of raw LLM answers into a verdict, an erroneous sentence and modified token indices
"""
import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from ..utils.errors import LlmParseError

_INDEX_KEYWORD_RE = re.compile(r"\b(?:Index|Indice|Indici)\s*:", re.IGNORECASE)
_INDEX_LIST_RE = re.compile(r"^\s*\[([^\]]*)\]")
_BARE_INDEX_LIST_RE = re.compile(r"^\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\.?\s*$")
_ANSWER_RE = re.compile(r"^\s*ANSWER\s*[:\-]?\s*", re.IGNORECASE)
_NO_RE = re.compile(r"^\W*NO\W*$")

QUOTE_PAIRS = (('"', '"'), ("“", "”"), ("„", "”"), ("„", "“"), ("«", "»"), ("<<", ">>"), ("'", "'"))


class Verdict(str, Enum):
    NO_PART_OF_SPEECH = "NoPartOfSpeech"
    CORRUPTED = "Corrupted"


@dataclass(frozen=True)
class ParsedCorruption:
    verdict: Verdict
    erroneous_text: Optional[str] = None
    indices: Optional[Tuple[int, ...]] = None


def parse_llm_response(raw: str) -> ParsedCorruption:
    """
    Parse an LLM answer

    Accepted shapes: a bare NO, or the erroneous sentence (optionally quoted and/or
    prefixed by ANSWER) followed by `Index:` and a bracketed list of 0-based positions.

    Raises:
        LlmParseError: missing index list, unparseable index list or empty sentence
    """
    text = (raw or "").strip()
    if _NO_RE.match(text):
        return ParsedCorruption(Verdict.NO_PART_OF_SPEECH)

    keyword = _INDEX_KEYWORD_RE.search(text)
    if keyword is None:
        raise LlmParseError("missing index list", raw_text=raw)

    indices = _parse_index_list(text[keyword.end():], raw)
    sentence = _strip_quotes(_ANSWER_RE.sub("", text[:keyword.start()].strip(), count=1).strip())
    if not sentence:
        raise LlmParseError("empty sentence", raw_text=raw)
    return ParsedCorruption(Verdict.CORRUPTED, sentence, indices)


def render_response(parsed: ParsedCorruption) -> str:
    """Well-formed answer text for a parsed corruption; parsing it gives the same value back"""
    if parsed.verdict == Verdict.NO_PART_OF_SPEECH:
        return "NO"
    positions = ", ".join(str(i) for i in parsed.indices or ())
    return f'"{parsed.erroneous_text}"\n\nIndex: [{positions}]'


def _parse_index_list(tail: str, raw: str) -> Tuple[int, ...]:
    bracketed = _INDEX_LIST_RE.match(tail)
    if bracketed:
        body = bracketed.group(1).strip()
    else:
        bare = _BARE_INDEX_LIST_RE.match(tail)
        if bare is None:
            raise LlmParseError("unparseable index list", raw_text=raw)
        body = bare.group(1)
    if not body:
        return ()
    values = []
    for item in body.split(","):
        item = item.strip().strip("'\"")
        if not re.fullmatch(r"\d+", item):
            raise LlmParseError(f"unparseable index list: bad entry '{item}'", raw_text=raw)
        values.append(int(item))
    return tuple(sorted(set(values)))


def _strip_quotes(text: str) -> str:
    for opening, closing in QUOTE_PAIRS:
        if len(text) >= len(opening) + len(closing) and text.startswith(opening) and text.endswith(closing):
            return text[len(opening):len(text) - len(closing)].strip()
    return text
