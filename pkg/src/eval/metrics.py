"""
Precision / recall / F-beta helpers shared by the GED and GEC scorers
"""
from dataclasses import asdict, dataclass
from typing import Dict

from ..utils.errors import UsageError

F_BETA = 0.5


def f_beta(p: float, r: float, beta: float = F_BETA) -> float:
    """(1 + b^2) * p * r / (b^2 * p + r), 0 when the denominator is 0"""
    if beta <= 0:
        raise UsageError(f"beta must be positive, got {beta}")
    if not (0.0 <= p <= 1.0 and 0.0 <= r <= 1.0):
        raise UsageError(f"precision and recall must lie in [0, 1], got {p}, {r}")
    b2 = beta * beta
    denominator = b2 * p + r
    if denominator == 0:
        return 0.0
    return (1 + b2) * p * r / denominator


@dataclass(frozen=True)
class Metrics:
    precision: float
    recall: float
    f_half: float
    tp: int = 0
    fp: int = 0
    fn: int = 0

    def to_dict(self) -> Dict:
        return asdict(self)


def metrics_from_counts(tp: int, fp: int, fn: int) -> Metrics:
    """
    Metrics from raw counts

    An empty denominator gives 0, except that nothing predicted against nothing to
    find counts as a perfect score.
    """
    if tp + fp + fn == 0:
        return Metrics(1.0, 1.0, 1.0, 0, 0, 0)
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    return Metrics(precision, recall, f_beta(precision, recall), tp, fp, fn)
