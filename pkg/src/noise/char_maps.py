"""
Character maps used by controlled misspellings: Romanian keyboard adjacency,
diacritic pairs and common Romanian misspellings
"""
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional

from ..utils.errors import ConfigurationError

# Romanian Standard layout: ă î after p, ș ț after l, â next to the left shift row
KEYBOARD_ROWS = [
    ("qwertyuiopăî", 0.0),
    ("asdfghjklșțâ", 0.25),
    ("zxcvbnm", 0.75),
]

DEFAULT_DIACRITIC_PAIRS = {
    "ă": "a", "â": "a", "î": "i", "ș": "s", "ț": "t",
    "Ă": "A", "Â": "A", "Î": "I", "Ș": "S", "Ț": "T",
    # cedilla variants still common in legal texts
    "ş": "s", "ţ": "t", "Ş": "S", "Ţ": "T",
}

REQUIRED_DIACRITICS = "ăâîșțĂÂÎȘȚ"

DEFAULT_COMMON_MISSPELLINGS = {
    "iii": "ii",
    "ii": "i",
    "â": "î",
    "î": "â",
    "ea": "ia",
    "ia": "ea",
    "x": "cs",
    "cs": "x",
    "ie": "e",
    "oa": "o",
    "nn": "n",
    "mn": "n",
}

ROMANIAN_ALPHABET = "aăâbcdefghiîjklmnopqrsștțuvwxyz"


def build_keyboard_proximity(rows=KEYBOARD_ROWS) -> Dict[str, str]:
    """Neighbors are keys on the same row at distance one or on an adjacent row within one key width"""
    positions = {}
    for row_index, (keys, offset) in enumerate(rows):
        for col, key in enumerate(keys):
            positions[key] = (row_index, col + offset)

    proximity = {}
    for key, (row, x) in positions.items():
        neighbors = []
        for other, (other_row, other_x) in positions.items():
            if other == key or abs(other_row - row) > 1:
                continue
            if other_row == row and abs(other_x - x) <= 1.0:
                neighbors.append(other)
            elif other_row != row and abs(other_x - x) < 1.0:
                neighbors.append(other)
        proximity[key] = "".join(neighbors)
    return proximity


@dataclass(frozen=True)
class CharMaps:
    keyboard_proximity: Mapping[str, str] = field(default_factory=build_keyboard_proximity)
    diacritic_pairs: Mapping[str, str] = field(default_factory=lambda: dict(DEFAULT_DIACRITIC_PAIRS))
    common_misspellings: Mapping[str, str] = field(default_factory=lambda: dict(DEFAULT_COMMON_MISSPELLINGS))

    def __post_init__(self):
        missing = [c for c in REQUIRED_DIACRITICS if c not in self.diacritic_pairs]
        if missing:
            raise ConfigurationError(
                f"noise.diacritic_pairs must cover {REQUIRED_DIACRITICS}, missing {''.join(missing)}",
                key="noise.diacritic_pairs")
        for key, value in self.common_misspellings.items():
            if not key or key == value:
                raise ConfigurationError(f"noise.common_misspellings: bad entry '{key}' -> '{value}'",
                                         key="noise.common_misspellings")

    @classmethod
    def from_config(cls, section: Optional[Mapping] = None) -> "CharMaps":
        """Merge user-provided maps over the built-in ones"""
        section = section or {}
        keyboard = dict(build_keyboard_proximity())
        keyboard.update(section.get("keyboard_proximity") or {})
        diacritics = dict(DEFAULT_DIACRITIC_PAIRS)
        diacritics.update(section.get("diacritic_pairs") or {})
        misspellings = dict(DEFAULT_COMMON_MISSPELLINGS)
        misspellings.update(section.get("common_misspellings") or {})
        return cls(keyboard, diacritics, misspellings)

    def keyboard_neighbors(self, char: str) -> str:
        neighbors = self.keyboard_proximity.get(char.lower(), "")
        return neighbors.upper() if char.isupper() else neighbors

    def diacritic_alternatives(self, char: str) -> List[str]:
        """Plain letter for a diacritic, or the diacritics a plain letter may gain"""
        if char in self.diacritic_pairs:
            return [self.diacritic_pairs[char]]
        return sorted(d for d, plain in self.diacritic_pairs.items()
                      if plain == char and d in REQUIRED_DIACRITICS)

    def misspellings_at(self, word: str, position: int) -> List[str]:
        return sorted(k for k in self.common_misspellings if word.startswith(k, position))
