"""
Train/test splitting with an optional source-corpus restriction on the test side
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..text.parallel_example import ParallelExample
from ..utils.errors import ConfigurationError, SplitError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SplitSpec:
    train_fraction: float = 0.9
    test_corpus_filter: Optional[str] = None

    def __post_init__(self):
        if not 0.0 < self.train_fraction < 1.0:
            raise ConfigurationError(f"train_fraction must lie strictly between 0 and 1, got {self.train_fraction}",
                                     key="train_fraction")


def split(examples: Sequence[ParallelExample],
          spec: SplitSpec,
          seed: int) -> Tuple[List[ParallelExample], List[ParallelExample]]:
    """
    Partition examples into train and test sets

    The test size is round(n * (1 - train_fraction)); test members are drawn uniformly
    from the eligible examples (all, or only those of the filtered corpus). Both sides
    keep the input order.

    Raises:
        SplitError: the filtered corpus has fewer examples than the test size
    """
    examples = list(examples)
    n_test = int(round(len(examples) * (1.0 - spec.train_fraction)))
    if spec.test_corpus_filter is None:
        eligible = list(range(len(examples)))
    else:
        eligible = [i for i, e in enumerate(examples) if e.source_corpus == spec.test_corpus_filter]
    if len(eligible) < n_test:
        shortfall = n_test - len(eligible)
        raise SplitError(f"test set needs {n_test} examples from '{spec.test_corpus_filter}', "
                         f"only {len(eligible)} available (short by {shortfall})", shortfall=shortfall)

    rng = np.random.default_rng(seed)
    chosen = set(int(i) for i in rng.choice(eligible, size=n_test, replace=False)) if n_test else set()
    train = [e for i, e in enumerate(examples) if i not in chosen]
    test = [e for i, e in enumerate(examples) if i in chosen]
    logger.info("split %d examples into %d train / %d test", len(examples), len(train), len(test))
    return train, test
