"""
Noise injection: probabilistic word- and character-level corruption producing
SPELL, ORTH and WO errors
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..taxonomy.error_taxonomy import OK_TAG
from ..text.tags import TagSequence
from ..text.tokenizer import Sentence, TokenKind, tokenize
from ..utils.errors import ConfigurationError
from .char_maps import ROMANIAN_ALPHABET, CharMaps

logger = logging.getLogger(__name__)

MAX_MISSPELL_ATTEMPTS = 10
MU_TOLERANCE = 1e-9


class WordOp(str, Enum):
    SUBSTITUTE = "Substitute"
    DELETE = "Delete"
    INSERT = "Insert"
    KEEP = "Keep"


class CharSubstitution(str, Enum):
    SWAP = "swap"
    RANDOM = "random"
    CONTROLLED = "controlled"


@dataclass(frozen=True)
class OpDistribution:
    mu_substitution: float
    mu_deletion: float
    mu_insertion: float
    mu_keep: float

    def __post_init__(self):
        values = self.as_tuple()
        if any(v < 0 for v in values):
            raise ConfigurationError(f"operation probabilities must be non-negative: {values}")
        if abs(sum(values) - 1.0) > MU_TOLERANCE:
            raise ConfigurationError(f"operation probabilities must sum to 1, got {sum(values)}")

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return self.mu_substitution, self.mu_deletion, self.mu_insertion, self.mu_keep

    @classmethod
    def from_config(cls, section) -> "OpDistribution":
        try:
            return cls(float(section["substitution"]), float(section["deletion"]),
                       float(section["insertion"]), float(section["keep"]))
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigurationError(f"bad operation distribution {section!r}: {e}")


def default_mu() -> OpDistribution:
    return OpDistribution(mu_substitution=0.1875, mu_deletion=0.05, mu_insertion=0.0625, mu_keep=0.7)


def derive_mu(keep: float, ins_over_del: float, sub_over_ins: float) -> OpDistribution:
    """
    Solve sub + ins + del = 1 - keep under ins = r * del and sub = s * ins

    Args:
        keep: Probability of leaving a unit untouched, in [0, 1)
        ins_over_del: Ratio of insertions to deletions (r)
        sub_over_ins: Ratio of substitutions to insertions (s)
    """
    if not 0.0 <= keep < 1.0:
        raise ConfigurationError(f"keep must lie in [0, 1), got {keep}")
    if ins_over_del <= 0 or sub_over_ins <= 0:
        raise ConfigurationError("operation ratios must be positive")
    rest = 1.0 - keep
    deletion = rest / (1.0 + ins_over_del + sub_over_ins * ins_over_del)
    insertion = ins_over_del * deletion
    substitution = sub_over_ins * insertion
    return OpDistribution(round(substitution, 12), round(deletion, 12), round(insertion, 12), keep)


def sample_word_op(rng: np.random.Generator, mu: OpDistribution) -> WordOp:
    """Categorical draw over the four operations"""
    u = rng.random()
    if u < mu.mu_substitution:
        return WordOp.SUBSTITUTE
    u -= mu.mu_substitution
    if u < mu.mu_deletion:
        return WordOp.DELETE
    u -= mu.mu_deletion
    if u < mu.mu_insertion:
        return WordOp.INSERT
    return WordOp.KEEP


def swap_adjacent(word: str, position: int) -> str:
    """Interchange the character at position with the one to its right"""
    if position < 0 or position + 1 >= len(word):
        return word
    return word[:position] + word[position + 1] + word[position] + word[position + 2:]


def random_char(rng: np.random.Generator, like: str = "", exclude: str = "") -> str:
    choices = [c for c in ROMANIAN_ALPHABET if c != exclude.lower()]
    char = choices[int(rng.integers(len(choices)))]
    return char.upper() if like.isupper() else char


def controlled_change(word: str, position: int, maps: CharMaps, rng: np.random.Generator,
                      sources: Sequence[str] = ("keyboard", "diacritic", "misspelling")
                      ) -> Optional[Tuple[str, int]]:
    """
    Replace the character(s) at position using keyboard proximity, diacritics or a
    common misspelling

    Returns:
        (replacement text, number of source characters consumed), or None when no
        source applies at that position
    """
    char = word[position]
    options = {}
    if "keyboard" in sources and maps.keyboard_neighbors(char):
        options["keyboard"] = [(n, 1) for n in maps.keyboard_neighbors(char)]
    if "diacritic" in sources and maps.diacritic_alternatives(char):
        options["diacritic"] = [(d, 1) for d in maps.diacritic_alternatives(char)]
    if "misspelling" in sources:
        keys = maps.misspellings_at(word, position)
        if keys:
            options["misspelling"] = [(maps.common_misspellings[k], len(k)) for k in keys]
    if not options:
        return None

    names = [s for s in sources if s in options]
    chosen = options[names[int(rng.integers(len(names)))]]
    return chosen[int(rng.integers(len(chosen)))]


def misspell_word(word: str, char_mu: OpDistribution, maps: CharMaps, rng: np.random.Generator,
                  substitution_weights: Sequence[float] = (1.0, 1.0, 1.0)) -> str:
    """
    Run every character of a word through a character-level operation

    The result may equal the input when every draw is Keep; callers resample.

    Args:
        word: Word token text
        char_mu: Character-level operation distribution
        maps: Character maps for controlled changes
        rng: Seeded generator
        substitution_weights: Relative weights of (adjacent swap, random char, controlled change)
    """
    weights = np.asarray(substitution_weights, dtype=float)
    weights = weights / weights.sum()
    modes = list(CharSubstitution)
    out: List[str] = []
    i = 0
    while i < len(word):
        char = word[i]
        op = sample_word_op(rng, char_mu)
        if op == WordOp.KEEP:
            out.append(char)
            i += 1
        elif op == WordOp.DELETE:
            i += 1
        elif op == WordOp.INSERT:
            out.append(char + random_char(rng, like=char))
            i += 1
        else:
            mode = modes[int(rng.choice(len(modes), p=weights))]
            if mode == CharSubstitution.SWAP and i + 1 < len(word):
                out.append(word[i + 1] + char)
                i += 2
                continue
            if mode == CharSubstitution.CONTROLLED:
                change = controlled_change(word, i, maps, rng)
                if change is not None:
                    out.append(change[0])
                    i += change[1]
                    continue
            out.append(random_char(rng, like=char, exclude=char))
            i += 1
    return "".join(out)


def is_single_word(text: str) -> bool:
    tokens = tokenize(text).tokens
    return len(tokens) == 1 and tokens[0].kind == TokenKind.WORD and tokens[0].text == text


def _fallback_misspelling(word: str, rng: np.random.Generator) -> str:
    for position in range(len(word) - 1):
        candidate = swap_adjacent(word, position)
        if candidate != word and is_single_word(candidate):
            return candidate
    for position, char in enumerate(word):
        if char.isalpha():
            return word[:position] + random_char(rng, like=char, exclude=char) + word[position + 1:]
    return word + random_char(rng)


class NoiseInjector:
    """Word-level noise engine; one instance can corrupt many sentences"""

    def __init__(self,
                 mu: Optional[OpDistribution] = None,
                 char_mu: Optional[OpDistribution] = None,
                 maps: Optional[CharMaps] = None,
                 vocabulary: Iterable[str] = (),
                 swap_share: float = 0.35,
                 bind_share: float = 0.7,
                 substitution_weights: Sequence[float] = (1.0, 1.0, 1.0)):
        self.mu = mu or default_mu()
        self.char_mu = char_mu or default_mu()
        self.maps = maps or CharMaps()
        self.vocabulary: Tuple[str, ...] = tuple(sorted(set(vocabulary)))
        for name, value in (("swap_share", swap_share), ("bind_share", bind_share)):
            if not 0.0 <= value <= 1.0:
                raise ConfigurationError(f"noise.{name} must lie in [0, 1], got {value}", key=f"noise.{name}")
        self.swap_share = swap_share
        self.bind_share = bind_share
        self.substitution_weights = tuple(substitution_weights)

    @staticmethod
    def build_vocabulary(sentences: Iterable[Sentence]) -> Tuple[str, ...]:
        words = set()
        for sentence in sentences:
            words.update(t.text for t in sentence.tokens if t.kind == TokenKind.WORD)
        return tuple(sorted(words))

    def misspell(self, word: str, rng: np.random.Generator) -> str:
        """Misspell until the word really changes and still reads as one word token"""
        for _ in range(MAX_MISSPELL_ATTEMPTS):
            candidate = misspell_word(word, self.char_mu, self.maps, rng, self.substitution_weights)
            if candidate != word and is_single_word(candidate):
                return candidate
        return _fallback_misspelling(word, rng)

    def corrupt(self, sentence: Sentence, rng: np.random.Generator) -> Tuple[Sentence, TagSequence]:
        return corrupt_sentence_noise(sentence, self.mu, self.char_mu, self.maps, rng, injector=self)


def corrupt_sentence_noise(sentence: Sentence,
                           mu: OpDistribution,
                           char_mu: OpDistribution,
                           maps: CharMaps,
                           rng: np.random.Generator,
                           injector: Optional[NoiseInjector] = None) -> Tuple[Sentence, TagSequence]:
    """
    Apply word-level noise to every word token, left to right

    Only word tokens are touched. Every word token gets exactly one
    operation draw, taken up front in token order. A swap or a bind pairs a word with
    its right neighbor only when the neighbor drew an altering operation itself; the
    neighbor's draw is then spent on the pair. A word that drew Keep is never altered,
    so the expected share of untouched words equals mu.mu_keep.

    Returns:
        (erroneous sentence, tags aligned to its tokens)
    """
    if injector is None:
        injector = NoiseInjector(mu, char_mu, maps)
    tokens = sentence.tokens
    ops = {i: sample_word_op(rng, mu) for i, t in enumerate(tokens) if t.kind == TokenKind.WORD}

    def partner(i: int) -> Optional[int]:
        j = i + 1
        if j in ops and ops[j] != WordOp.KEEP:
            return j
        return None

    out: List[Tuple[str, str]] = []
    i = 0
    while i < len(tokens):
        token = tokens[i]
        op = ops.get(i)
        if op is None or op == WordOp.KEEP:
            out.append((token.text, OK_TAG))
        elif op == WordOp.DELETE:
            pass
        elif op == WordOp.SUBSTITUTE:
            j = partner(i)
            if rng.random() < injector.swap_share and j is not None and tokens[j].text != token.text:
                out.append((tokens[j].text, "WO"))
                out.append((token.text, "WO"))
                i += 2
                continue
            out.append((injector.misspell(token.text, rng), "SPELL"))
        else:
            j = partner(i)
            if rng.random() < injector.bind_share and j is not None:
                out.append((token.text + tokens[j].text, "ORTH"))
                i += 2
                continue
            following = tokens[i + 1].text if i + 1 in ops else None
            stray = _stray_word(injector.vocabulary, rng, token.text, following)
            out.append((token.text, OK_TAG))
            if stray is not None:
                out.append((stray, "SPELL"))
        i += 1

    erroneous = Sentence.from_texts([text for text, _ in out]) if out else Sentence("", ())
    return erroneous, TagSequence(tuple(tag for _, tag in out))


def _stray_word(vocabulary: Sequence[str], rng: np.random.Generator,
                current: str, following: Optional[str]) -> Optional[str]:
    # a stray word equal to a neighbor would be indistinguishable from it after alignment
    if not vocabulary:
        return None
    for _ in range(MAX_MISSPELL_ATTEMPTS):
        word = vocabulary[int(rng.integers(len(vocabulary)))]
        if word != current and word != following:
            return word
    return None
