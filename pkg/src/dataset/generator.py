"""
Generation orchestrator: routes each clean sentence to the engine owning its planned error type
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, Mapping, Optional, Sequence

from ..confusion.confusion_generator import ConfusionGenerator, confusion_from_section
from ..llm.ces_store import CorruptionExampleSet
from ..llm.llm_client import LlmClient
from ..llm.llm_generator import LlmSettings, generate_llm_example
from ..noise.char_maps import CharMaps
from ..noise.noise_injector import NoiseInjector, OpDistribution, default_mu
from ..taxonomy.error_taxonomy import ErrorPlan, ErrorType, Method
from ..text.parallel_example import ParallelExample
from ..text.tokenizer import Sentence, tokenize
from ..utils.errors import GecToolkitError, InsufficientExamplesError, UsageError
from ..utils.seeding import derive_seed, make_rng
from .corpus import CorpusSentence

logger = logging.getLogger(__name__)

MAX_ENGINE_ATTEMPTS = 3
BATCH_PER_WORKER = 32


@dataclass
class GenerationEngines:
    noise: NoiseInjector
    confusion: ConfusionGenerator
    llm: Optional[LlmClient] = None
    ces: Dict[str, CorruptionExampleSet] = field(default_factory=dict)
    llm_settings: LlmSettings = field(default_factory=LlmSettings)

    @classmethod
    def from_config(cls, config, vocabulary: Sequence[str] = (),
                    llm: Optional[LlmClient] = None,
                    ces: Optional[Dict[str, CorruptionExampleSet]] = None) -> "GenerationEngines":
        """
        Build all engines from a toolkit config

        Args:
            config: Object exposing `section(name)` (see config.config.ToolkitConfig)
            vocabulary: Words available to the noise engine for stray insertions
            llm: LLM backend; LLM-planned sentences fall back to noise without one
            ces: Two-shot example sets keyed by error code
        """
        noise_section = config.section("noise")
        noise = NoiseInjector(
            mu=_distribution(noise_section.get("mu")),
            char_mu=_distribution(noise_section.get("char_mu")),
            maps=CharMaps.from_config(noise_section),
            vocabulary=vocabulary,
            swap_share=float(noise_section.get("swap_share", 0.35)),
            bind_share=float(noise_section.get("bind_share", 0.7)),
        )
        confusion_section = config.section("confusion")
        lists, matrix = confusion_from_section(confusion_section)
        confusion = ConfusionGenerator(lists, matrix, float(confusion_section.get("probability", 0.3)))
        return cls(noise, confusion, llm, dict(ces or {}), LlmSettings.from_config(config.section("llm")))


def _distribution(section: Optional[Mapping]) -> OpDistribution:
    return OpDistribution.from_config(section) if section else default_mu()


def corrupt_sentence(item: CorpusSentence,
                     error: ErrorType,
                     engines: GenerationEngines,
                     seed: int) -> Optional[ParallelExample]:
    """
    Produce one valid example for a clean sentence, or None when every engine failed

    Invalid engine outputs are retried with fresh derived generators; LLM sentences that
    come back empty-handed are re-planned onto noise injection.
    """
    sentence = tokenize(item.text)
    if not sentence.tokens:
        logger.warning("%s: empty sentence skipped", item.example_id)
        return None
    sentence_seed = derive_seed(seed, item.example_id)

    methods = [error.method]
    if error.method != Method.NOISE_INJECTION:
        methods.append(Method.NOISE_INJECTION)

    for method in methods:
        for attempt in range(MAX_ENGINE_ATTEMPTS):
            rng = make_rng(derive_seed(sentence_seed, method.value, attempt))
            try:
                example = _run_engine(method, item, sentence, error, engines, rng, sentence_seed)
            except InsufficientExamplesError as e:
                logger.warning("%s: %s; falling back to noise injection", item.example_id, e)
                break
            except GecToolkitError as e:
                logger.warning("%s: %s engine failed: %s", item.example_id, method.value, e)
                break
            if example is None:
                break
            problems = example.violations()
            if not problems:
                return example
            logger.debug("%s attempt %d: invalid %s output %s", item.example_id, attempt + 1, method.value, problems)
        if method != Method.NOISE_INJECTION:
            logger.info("%s: %s gave no usable corruption, re-planned to noise injection",
                        item.example_id, error.code)

    logger.warning("%s: no engine produced a valid example, sentence skipped", item.example_id)
    return None


def _run_engine(method: Method, item: CorpusSentence, sentence: Sentence, error: ErrorType,
                engines: GenerationEngines, rng, sentence_seed: int) -> Optional[ParallelExample]:
    if method == Method.NOISE_INJECTION:
        erroneous, tags = engines.noise.corrupt(sentence, rng)
    elif method == Method.CONFUSION_LIST:
        erroneous, tags = engines.confusion.corrupt(sentence, error.code, rng)
    elif method.is_llm:
        if engines.llm is None:
            logger.debug("%s: no LLM client configured", item.example_id)
            return None
        outcome = generate_llm_example(
            engines.llm, error, sentence, rng,
            ces=engines.ces.get(error.code),
            settings=engines.llm_settings,
            example_id=item.example_id,
            source_corpus=item.source_corpus,
            seed=sentence_seed,
        )
        if not isinstance(outcome, ParallelExample):
            logger.debug("%s: %s", item.example_id, outcome)
            return None
        return outcome
    else:
        raise UsageError(f"unknown generation method {method}")

    return ParallelExample(
        id=item.example_id,
        source_corpus=item.source_corpus,
        correct=sentence,
        erroneous=erroneous,
        tags=tags,
        injected=tuple(tags.error_types()),
        seed=sentence_seed,
        planned=error.code,
        method=method.value,
    )


def generate_dataset(corpus: Sequence[CorpusSentence],
                     plan: ErrorPlan,
                     engines: GenerationEngines,
                     seed: int,
                     max_workers: int = 4,
                     on_progress: Optional[Callable[[int], None]] = None) -> Iterator[ParallelExample]:
    """
    Corrupt a corpus sentence by sentence, in parallel, yielding examples in input order

    Args:
        corpus: Clean sentences with source labels
        plan: One planned error type per sentence
        engines: Noise, confusion and LLM engines
        seed: Global seed; every sentence derives its own generator from it
        max_workers: Worker threads
        on_progress: Called with the number of sentences finished in each batch

    Raises:
        UsageError: the plan is shorter than the corpus
    """
    if len(plan) < len(corpus):
        raise UsageError(f"error plan covers {len(plan)} sentences, corpus has {len(corpus)}")
    if max_workers < 1:
        raise UsageError("max_workers must be at least 1")

    batch_size = max_workers * BATCH_PER_WORKER
    skipped = 0
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        for start in range(0, len(corpus), batch_size):
            batch = corpus[start:start + batch_size]
            errors = [plan[start + offset] for offset in range(len(batch))]
            for example in executor.map(lambda pair: corrupt_sentence(pair[0], pair[1], engines, seed),
                                        zip(batch, errors)):
                if example is None:
                    skipped += 1
                else:
                    yield example
            if on_progress:
                on_progress(len(batch))
    if skipped:
        logger.warning("%d sentences skipped", skipped)
