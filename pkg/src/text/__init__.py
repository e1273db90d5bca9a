from .alignment import AlignmentOp, align, diff_tags, edit_distance
from .parallel_example import ParallelExample, tagged_runs
from .tags import TagSequence, indices_to_tags, tag_value
from .tokenizer import Sentence, Token, TokenKind, detokenize, normalize_whitespace, tokenize
