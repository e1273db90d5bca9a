from .char_maps import CharMaps, build_keyboard_proximity
from .noise_injector import (
    NoiseInjector,
    OpDistribution,
    WordOp,
    controlled_change,
    corrupt_sentence_noise,
    default_mu,
    derive_mu,
    misspell_word,
    sample_word_op,
    swap_adjacent,
)
