"""
Score reports as pandas tables and JSON-ready documents, carrying decoding metadata
"""
from dataclasses import dataclass, field
from typing import Dict, Optional

import pandas as pd

from .metrics import Metrics

AGGREGATE_LABEL = "ALL"


@dataclass(frozen=True)
class DecodingInfo:
    """Decoding settings of the system that produced the predictions; recorded, never used"""
    top_p: float = 0.9
    beam_size: int = 5
    strategy: Optional[str] = None

    def to_dict(self) -> Dict:
        return {"top_p": self.top_p, "beam_size": self.beam_size, "strategy": self.strategy}


@dataclass
class ScoreReport:
    task: str
    aggregate: Metrics
    per_tag: Dict[str, Metrics] = field(default_factory=dict)
    decoding: DecodingInfo = field(default_factory=DecodingInfo)

    def to_frame(self) -> pd.DataFrame:
        rows = {tag: m.to_dict() for tag, m in self.per_tag.items()}
        rows[AGGREGATE_LABEL] = self.aggregate.to_dict()
        frame = pd.DataFrame.from_dict(rows, orient="index")
        frame.index.name = "tag" if self.per_tag else "scope"
        return frame[["precision", "recall", "f_half", "tp", "fp", "fn"]]

    def to_dict(self) -> Dict:
        return {
            "task": self.task,
            "aggregate": self.aggregate.to_dict(),
            "per_tag": {tag: m.to_dict() for tag, m in self.per_tag.items()},
            "decoding": self.decoding.to_dict(),
        }
