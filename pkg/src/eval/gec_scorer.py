"""
GEC scoring: token-level edit extraction on both hypothesis and reference, then exact edit matching
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from ..text.alignment import EQUAL, align
from ..text.tokenizer import Sentence
from ..utils.errors import ScoringError, UsageError
from .metrics import Metrics, f_beta

TokensLike = Union[Sentence, Sequence[str]]


@dataclass(frozen=True)
class Edit:
    """Replace source tokens [start, end) with `replacement` (empty for a deletion)"""
    start: int
    end: int
    replacement: Tuple[str, ...]

    @property
    def src_span(self) -> Tuple[int, int]:
        return self.start, self.end


def _texts(tokens: TokensLike) -> List[str]:
    return tokens.texts if isinstance(tokens, Sentence) else list(tokens)


def extract_edits(source: TokensLike, target: TokensLike) -> List[Edit]:
    """Merge every maximal run of non-equal alignment steps into one span edit"""
    src, tgt = _texts(source), _texts(target)
    edits: List[Edit] = []
    run_start = None
    replacement: List[str] = []
    position = 0
    for op in align(src, tgt):
        if op.op == EQUAL:
            if run_start is not None:
                edits.append(Edit(run_start, position, tuple(replacement)))
                run_start, replacement = None, []
            position += 1
            continue
        if run_start is None:
            run_start = position
        if op.tgt is not None:
            replacement.append(tgt[op.tgt])
        if op.src is not None:
            position += 1
    if run_start is not None:
        edits.append(Edit(run_start, position, tuple(replacement)))
    return edits


def apply_edits(source: TokensLike, edits: Sequence[Edit]) -> List[str]:
    """Patch source tokens with sorted, non-overlapping edits"""
    src = _texts(source)
    out: List[str] = []
    cursor = 0
    for edit in edits:
        if edit.start < cursor or edit.end < edit.start or edit.end > len(src):
            raise UsageError(f"edit {edit} overlaps or leaves the {len(src)}-token source")
        out.extend(src[cursor:edit.start])
        out.extend(edit.replacement)
        cursor = edit.end
    out.extend(src[cursor:])
    return out


def score_gec(sources: Sequence[TokensLike],
              hypotheses: Sequence[TokensLike],
              references: Sequence[TokensLike]) -> Metrics:
    """
    Corpus-level edit precision/recall/F0.5

    Counts are summed over all sentences before the ratios; no predicted edits gives
    P = 1 and no gold edits gives R = 1.
    """
    if not len(sources) == len(hypotheses) == len(references):
        raise ScoringError(f"{len(sources)} sources, {len(hypotheses)} hypotheses, {len(references)} references")
    matched = predicted = gold = 0
    for source, hypothesis, reference in zip(sources, hypotheses, references):
        hyp_edits = set(extract_edits(source, hypothesis))
        ref_edits = set(extract_edits(source, reference))
        matched += len(hyp_edits & ref_edits)
        predicted += len(hyp_edits)
        gold += len(ref_edits)
    precision = matched / predicted if predicted else 1.0
    recall = matched / gold if gold else 1.0
    return Metrics(precision, recall, f_beta(precision, recall),
                   tp=matched, fp=predicted - matched, fn=gold - matched)
