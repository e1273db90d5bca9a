"""
Token-level minimum edit alignment shared by tag derivation, validation and GEC scoring
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence

from ..taxonomy.error_taxonomy import OK_TAG
from .tags import TagLike, TagSequence, tag_value
from .tokenizer import Sentence

EQUAL = "equal"
SUBSTITUTE = "substitute"
DELETE = "delete"
INSERT = "insert"


@dataclass(frozen=True)
class AlignmentOp:
    """One alignment step; src/tgt are token indices or None when the side has no token"""
    op: str
    src: Optional[int]
    tgt: Optional[int]


def edit_distance_table(source: Sequence[str], target: Sequence[str]) -> List[List[int]]:
    rows, cols = len(source) + 1, len(target) + 1
    table = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        table[i][0] = i
    for j in range(cols):
        table[0][j] = j
    for i in range(1, rows):
        for j in range(1, cols):
            diagonal = table[i - 1][j - 1] + (0 if source[i - 1] == target[j - 1] else 1)
            table[i][j] = min(diagonal, table[i - 1][j] + 1, table[i][j - 1] + 1)
    return table


def edit_distance(source: Sequence[str], target: Sequence[str]) -> int:
    return edit_distance_table(source, target)[-1][-1]


def align(source: Sequence[str], target: Sequence[str]) -> List[AlignmentOp]:
    """
    Minimum-cost alignment (equal=0, substitute/delete/insert=1)

    Ties are broken by preferring a match, then substitution, then deletion, then
    insertion while walking back from the end of both sequences.
    """
    table = edit_distance_table(source, target)
    ops: List[AlignmentOp] = []
    i, j = len(source), len(target)
    while i > 0 or j > 0:
        cost = table[i][j]
        if i > 0 and j > 0 and source[i - 1] == target[j - 1] and cost == table[i - 1][j - 1]:
            ops.append(AlignmentOp(EQUAL, i - 1, j - 1))
            i, j = i - 1, j - 1
        elif i > 0 and j > 0 and cost == table[i - 1][j - 1] + 1:
            ops.append(AlignmentOp(SUBSTITUTE, i - 1, j - 1))
            i, j = i - 1, j - 1
        elif i > 0 and cost == table[i - 1][j] + 1:
            ops.append(AlignmentOp(DELETE, i - 1, None))
            i -= 1
        else:
            ops.append(AlignmentOp(INSERT, None, j - 1))
            j -= 1
    ops.reverse()
    return ops


def changed_target_positions(source: Sequence[str], target: Sequence[str]) -> List[int]:
    """Target-side positions that are substituted or inserted"""
    return [op.tgt for op in align(source, target) if op.op in (SUBSTITUTE, INSERT)]


def diff_tags(correct: Sentence, erroneous: Sentence, error: TagLike) -> TagSequence:
    """
    Tag every erroneous-side token that takes part in a substitution or insertion

    Deleted correct tokens have no erroneous-side counterpart and leave no tag.
    """
    code = tag_value(error)
    tags = [OK_TAG] * len(erroneous.tokens)
    for position in changed_target_positions(correct.texts, erroneous.texts):
        tags[position] = code
    return TagSequence(tuple(tags))
