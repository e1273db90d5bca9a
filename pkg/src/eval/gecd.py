"""
GEC-D model input: erroneous tokens, a separator, then the detection tags
"""
from typing import List, Sequence, Tuple, Union

from ..text.tags import TagSequence
from ..text.tokenizer import Sentence
from ..utils.errors import UsageError

SEP_TOKEN = "<SEP>"


def serialize_gecd_input(erroneous: Union[Sentence, Sequence[str]], tags: Sequence[str]) -> str:
    tokens = erroneous.texts if isinstance(erroneous, Sentence) else list(erroneous)
    tags = list(tags)
    if len(tokens) != len(tags):
        raise UsageError(f"{len(tags)} tags for {len(tokens)} tokens")
    return " ".join(tokens + [SEP_TOKEN] + tags)


def parse_gecd_input(text: str) -> Tuple[List[str], TagSequence]:
    parts = text.split()
    if parts.count(SEP_TOKEN) != 1:
        raise UsageError(f"expected exactly one {SEP_TOKEN} in GEC-D input")
    middle = parts.index(SEP_TOKEN)
    tokens, tags = parts[:middle], parts[middle + 1:]
    if len(tokens) != len(tags):
        raise UsageError(f"{len(tags)} tags for {len(tokens)} tokens in GEC-D input")
    return tokens, TagSequence(tuple(tags))
