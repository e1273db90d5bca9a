"""
Error tag sequences
"""
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

from ..taxonomy.error_taxonomy import OK_TAG, ErrorType
from ..utils.errors import TagValidationError

TagLike = Union[str, ErrorType]


def tag_value(tag: TagLike) -> str:
    return tag.code if isinstance(tag, ErrorType) else str(tag)


@dataclass(frozen=True)
class TagSequence:
    tags: Tuple[str, ...]

    @classmethod
    def of(cls, tags: Iterable[TagLike]) -> "TagSequence":
        return cls(tuple(tag_value(t) for t in tags))

    @classmethod
    def all_ok(cls, length: int) -> "TagSequence":
        return cls((OK_TAG,) * length)

    @classmethod
    def from_string(cls, text: str) -> "TagSequence":
        return cls(tuple(text.split()))

    def __len__(self) -> int:
        return len(self.tags)

    def __iter__(self):
        return iter(self.tags)

    def __getitem__(self, index):
        return self.tags[index]

    def as_string(self) -> str:
        """Whitespace-joined form, e.g. 'CONJ CONJ O O ORTH'"""
        return " ".join(self.tags)

    def error_positions(self) -> List[int]:
        return [i for i, tag in enumerate(self.tags) if tag != OK_TAG]

    def error_types(self) -> List[str]:
        """Distinct non-O tags in order of first appearance"""
        seen: List[str] = []
        for tag in self.tags:
            if tag != OK_TAG and tag not in seen:
                seen.append(tag)
        return seen

    def has_errors(self) -> bool:
        return any(tag != OK_TAG for tag in self.tags)


def indices_to_tags(token_count: int, indices: Sequence[int], error: TagLike) -> TagSequence:
    """
    Turn an index list (as returned by the LLM) into a tag sequence

    Args:
        token_count: Length of the erroneous sentence
        indices: 0-based positions of modified tokens; duplicates are allowed
        error: Tag to place at every listed position

    Raises:
        TagValidationError: naming the first index outside [0, token_count)
    """
    code = tag_value(error)
    tags = [OK_TAG] * token_count
    for index in indices:
        if not isinstance(index, int) or index < 0 or index >= token_count:
            raise TagValidationError(
                f"index {index} out of range for a {token_count}-token sentence", index=index)
        tags[index] = code
    return TagSequence(tuple(tags))
