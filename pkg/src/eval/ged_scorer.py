"""
Grammatical error detection scoring with one confusion tally per error type
"""
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

from ..taxonomy.error_taxonomy import OK_TAG
from ..text.tags import TagSequence
from ..utils.errors import ScoringError
from .metrics import Metrics, metrics_from_counts


@dataclass
class TagCounts:
    tp: int = 0
    fp: int = 0
    fn: int = 0

    def metrics(self) -> Metrics:
        return metrics_from_counts(self.tp, self.fp, self.fn)


def tally_ged(pred: Sequence[Sequence[str]],
              gold: Sequence[Sequence[str]],
              mismatch_counts_gold_fn: bool = False) -> Dict[str, TagCounts]:
    """
    Per-tag counts, compared position by position

    A predicted error tag equal to the gold tag is a TP for it, any other predicted error
    tag is an FP for the predicted tag, and a predicted O over a gold error tag is an FN
    for the gold tag. O against O is not counted.

    Args:
        pred: Predicted tag sequences
        gold: Gold tag sequences
        mismatch_counts_gold_fn: also count an FN for the gold tag when both sides carry
            different error tags

    Raises:
        ScoringError: sequence count or length mismatch, naming the example index
    """
    if len(pred) != len(gold):
        raise ScoringError(f"{len(pred)} predicted sequences for {len(gold)} gold sequences")
    counts: Dict[str, TagCounts] = defaultdict(TagCounts)
    for index, (p_tags, g_tags) in enumerate(zip(pred, gold)):
        if len(p_tags) != len(g_tags):
            raise ScoringError(f"example {index}: {len(p_tags)} predicted tags for {len(g_tags)} gold tags",
                               example_index=index)
        for p, g in zip(p_tags, g_tags):
            if p != OK_TAG:
                if p == g:
                    counts[p].tp += 1
                else:
                    counts[p].fp += 1
                    if mismatch_counts_gold_fn and g != OK_TAG:
                        counts[g].fn += 1
            elif g != OK_TAG:
                counts[g].fn += 1
    return dict(counts)


def score_ged(pred: Sequence[TagSequence],
              gold: Sequence[TagSequence],
              mismatch_counts_gold_fn: bool = False) -> Tuple[Dict[str, Metrics], Metrics]:
    """
    Returns:
        (metrics per error tag, aggregate metrics over the summed counts)
    """
    counts = tally_ged(pred, gold, mismatch_counts_gold_fn)
    per_tag = {tag: c.metrics() for tag, c in sorted(counts.items())}
    total = TagCounts(
        tp=sum(c.tp for c in counts.values()),
        fp=sum(c.fp for c in counts.values()),
        fn=sum(c.fn for c in counts.values()),
    )
    return per_tag, total.metrics()
