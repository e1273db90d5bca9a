"""
The dataset atom: a correct sentence, its corrupted counterpart and the error tags
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..taxonomy.error_taxonomy import default_taxonomy
from .alignment import changed_target_positions
from .tags import TagSequence
from .tokenizer import Sentence


@dataclass(frozen=True)
class ParallelExample:
    id: str
    source_corpus: str
    correct: Sentence
    erroneous: Sentence
    tags: TagSequence
    injected: Tuple[str, ...]
    seed: int
    # provenance: planned error type and the engine that actually produced the example
    planned: Optional[str] = None
    method: Optional[str] = None

    def violations(self, strict_positions: bool = True) -> List[str]:
        """
        List every broken invariant; an empty list means the example is valid

        Args:
            strict_positions: also require non-O tags to sit on tokens that changed
        """
        problems = []
        if len(self.tags) != len(self.erroneous.tokens):
            problems.append(
                f"{len(self.tags)} tags for {len(self.erroneous.tokens)} erroneous tokens")
            return problems

        error_types = self.tags.error_types()
        missing = [t for t in error_types if t not in self.injected]
        if missing:
            problems.append(f"tags {missing} not listed in injected {list(self.injected)}")

        known = default_taxonomy()
        unknown = [t for t in list(self.injected) + error_types if t not in known]
        if unknown:
            problems.append(f"unknown error types {sorted(set(unknown))}")

        if self.erroneous.raw == self.correct.raw and self.tags.has_errors():
            problems.append("unchanged sentence carries error tags")

        if strict_positions and self.tags.has_errors():
            changed = set(changed_target_positions(self.correct.texts, self.erroneous.texts))
            for run in tagged_runs(self.tags):
                if not changed.intersection(run):
                    problems.append(f"error tags on unchanged positions {run}")
        return problems

    def is_valid(self) -> bool:
        return not self.violations()


def tagged_runs(tags: TagSequence) -> List[List[int]]:
    """
    Group error positions into maximal runs of the same consecutive tag

    A multi-token error span ("cel mai Oficial") is tagged on every token, so a run is
    legitimate as long as one of its tokens really changed.
    """
    runs: List[List[int]] = []
    previous = None
    for position in tags.error_positions():
        if runs and previous == position - 1 and tags[position] == tags[previous]:
            runs[-1].append(position)
        else:
            runs.append([position])
        previous = position
    return runs
