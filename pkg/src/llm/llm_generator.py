"""
LLM corruption pipeline: prompt, submit with retries, parse, validate and tag; plus CES enrichment
"""
import logging
import time
from dataclasses import dataclass
from typing import Callable, Iterable, List, Mapping, Optional, Union

import numpy as np

from ..taxonomy.error_taxonomy import ErrorType, Method
from ..text.alignment import DELETE, align, changed_target_positions, diff_tags
from ..text.parallel_example import ParallelExample, tagged_runs
from ..text.tags import indices_to_tags
from ..text.tokenizer import Sentence, normalize_whitespace, tokenize
from ..utils.errors import LlmClientError, LlmParseError, UsageError
from ..utils.seeding import derive_seed, make_rng
from .ces_store import CesEntry, CorruptionExampleSet, Origin
from .llm_client import LlmClient, LlmRequest
from .prompts import build_two_shot_prompt, build_zero_shot_prompt
from .response_parser import ParsedCorruption, Verdict, parse_llm_response

logger = logging.getLogger(__name__)

NO_MODIFICATION = "no modification"
INDEX_OUT_OF_RANGE = "index out of range"
CHANGED_OUTSIDE_INDICES = "tokens outside the index set changed"
INDEXED_UNCHANGED = "indexed tokens unchanged"


@dataclass(frozen=True)
class NoPartOfSpeech:
    """The model reported that the sentence has nothing to corrupt for this error type"""
    error_code: str


@dataclass(frozen=True)
class GenerationFailure:
    error_code: str
    reason: str
    raw_text: Optional[str] = None


LlmOutcome = Union[ParallelExample, NoPartOfSpeech, GenerationFailure]


@dataclass(frozen=True)
class LlmSettings:
    model_id: str = "gpt-4o"
    temperature: float = 0.7
    max_retries: int = 3
    backoff_seconds: float = 1.0

    @classmethod
    def from_config(cls, section: Optional[Mapping]) -> "LlmSettings":
        section = section or {}
        return cls(
            model_id=str(section.get("model_id", cls.model_id)),
            temperature=float(section.get("temperature", cls.temperature)),
            max_retries=max(1, int(section.get("max_retries", cls.max_retries))),
            backoff_seconds=float(section.get("backoff_seconds", cls.backoff_seconds)),
        )


def validate_corruption(correct: Sentence, parsed: ParsedCorruption, error: ErrorType) -> List[str]:
    """
    Check a parsed corruption against its clean sentence

    Every maximal run of consecutive indices, tagged with the error's code, must cover at
    least one token that really changed.

    Returns:
        Failure reasons; empty when the corruption is usable as reported

    Raises:
        UsageError: if the error type is not generated by an LLM
    """
    if not error.method.is_llm:
        raise UsageError(f"{error.code} is generated by {error.method.value}, not by an LLM")
    erroneous = tokenize(parsed.erroneous_text)
    if normalize_whitespace(parsed.erroneous_text) == normalize_whitespace(correct.raw):
        return [NO_MODIFICATION]

    reasons = []
    indices = sorted(set(parsed.indices or ()))
    out_of_range = [i for i in indices if i >= len(erroneous.tokens)]
    if out_of_range:
        reasons.append(f"{INDEX_OUT_OF_RANGE}: {out_of_range}")
        indices = [i for i in indices if i < len(erroneous.tokens)]

    changed = set(changed_target_positions(correct.texts, erroneous.texts))
    outside = sorted(changed - set(indices))
    if outside:
        reasons.append(f"{CHANGED_OUTSIDE_INDICES}: {outside}")
    # pure deletions leave no erroneous-side position to index
    only_deletions = not changed and any(op.op == DELETE for op in align(correct.texts, erroneous.texts))
    if indices and not only_deletions:
        tags = indices_to_tags(len(erroneous.tokens), indices, error)
        idle = [run for run in tagged_runs(tags) if not changed.intersection(run)]
        if idle:
            reasons.append(f"{INDEXED_UNCHANGED}: {idle}")
    return reasons


def build_prompt(error: ErrorType, sentence: str,
                 ces: Optional[CorruptionExampleSet], rng: np.random.Generator) -> str:
    if error.method == Method.ZERO_SHOT_LLM:
        return build_zero_shot_prompt(error, sentence)
    if error.method == Method.TWO_SHOT_LLM:
        if ces is None:
            ces = CorruptionExampleSet(error)
        ex1, ex2 = ces.pick_pair(rng)
        return build_two_shot_prompt(error, sentence, ex1, ex2)
    raise UsageError(f"{error.code} is generated by {error.method.value}, not by an LLM")


def generate_llm_example(client: LlmClient,
                         error: ErrorType,
                         sentence: Union[str, Sentence],
                         rng: np.random.Generator,
                         ces: Optional[CorruptionExampleSet] = None,
                         settings: Optional[LlmSettings] = None,
                         example_id: str = "",
                         source_corpus: str = "",
                         seed: int = 0,
                         sleep: Callable[[float], None] = time.sleep) -> LlmOutcome:
    """
    Corrupt one clean sentence with a zero-shot or two-shot prompt

    Args:
        client: LLM backend
        error: Error type to inject (its method selects the prompt)
        sentence: Clean sentence
        rng: Generator used to draw the two CES examples
        ces: Example pool, required for two-shot error types
        settings: Model, temperature and retry policy
        example_id, source_corpus, seed: Provenance copied onto the example
        sleep: Backoff hook

    Returns:
        ParallelExample, NoPartOfSpeech or GenerationFailure

    Raises:
        InsufficientExamplesError: two-shot error type with fewer than 2 CES entries
    """
    settings = settings or LlmSettings()
    correct = sentence if isinstance(sentence, Sentence) else tokenize(normalize_whitespace(sentence))
    prompt = build_prompt(error, correct.raw, ces, rng)
    request = LlmRequest(prompt=prompt, temperature=settings.temperature, model_id=settings.model_id)

    last_reason, last_raw = "no attempt made", None
    for attempt in range(settings.max_retries):
        if attempt:
            sleep(settings.backoff_seconds * 2 ** (attempt - 1))
        try:
            raw = client.complete(request).text
        except LlmClientError as e:
            last_reason, last_raw = f"client error: {e}", None
            logger.warning("%s attempt %d: %s", error.code, attempt + 1, e)
            continue
        last_raw = raw
        try:
            parsed = parse_llm_response(raw)
        except LlmParseError as e:
            last_reason = f"parse error: {e}"
            logger.warning("%s attempt %d: %s in %r", error.code, attempt + 1, e, raw[:80])
            continue

        if parsed.verdict == Verdict.NO_PART_OF_SPEECH:
            return NoPartOfSpeech(error.code)

        reasons = validate_corruption(correct, parsed, error)
        if NO_MODIFICATION in reasons:
            last_reason = NO_MODIFICATION
            logger.info("%s attempt %d: model returned the sentence unchanged", error.code, attempt + 1)
            continue

        erroneous = tokenize(normalize_whitespace(parsed.erroneous_text))
        if reasons:
            logger.info("%s: index list rejected (%s), deriving tags by alignment", error.code, "; ".join(reasons))
            tags = diff_tags(correct, erroneous, error)
        else:
            tags = indices_to_tags(len(erroneous.tokens), parsed.indices or (), error)
        if not tags.has_errors():
            last_reason = "deletion-only change leaves nothing to tag"
            continue
        return ParallelExample(
            id=example_id,
            source_corpus=source_corpus,
            correct=correct,
            erroneous=erroneous,
            tags=tags,
            injected=(error.code,),
            seed=seed,
            planned=error.code,
            method=error.method.value,
        )

    return GenerationFailure(error.code, last_reason, last_raw)


class Reviewer:
    """Decides whether an LLM-generated pair may join a CES"""

    def review(self, entry: CesEntry, error_type: ErrorType) -> bool:
        raise NotImplementedError


class AutoAcceptReviewer(Reviewer):
    def review(self, entry: CesEntry, error_type: ErrorType) -> bool:
        return True


class InteractiveReviewer(Reviewer):
    """Terminal review: shows the pair and its tags, then asks for y/n"""

    def __init__(self, input_fn: Callable[[str], str] = input, output_fn: Callable[[str], None] = print):
        self.input_fn = input_fn
        self.output_fn = output_fn

    def review(self, entry: CesEntry, error_type: ErrorType) -> bool:
        self.output_fn(f"\n🏷️  {error_type.code}: {error_type.description}")
        self.output_fn(f"✅ correct:   {entry.correct}")
        self.output_fn(f"❌ erroneous: {entry.erroneous}")
        self.output_fn(f"🔖 tags:      {entry.tags.as_string()}")
        while True:
            answer = self.input_fn("Accept? [y/n]: ").strip().lower()
            if answer in ("y", "yes", "d", "da"):
                return True
            if answer in ("n", "no", "nu"):
                return False
            self.output_fn("Please answer y or n")


def enrich_ces(client: LlmClient,
               ces: CorruptionExampleSet,
               corpus: Iterable[Union[str, Sentence]],
               reviewer: Reviewer,
               seed: int = 0,
               settings: Optional[LlmSettings] = None,
               sleep: Callable[[float], None] = time.sleep) -> CorruptionExampleSet:
    """
    Grow a CES with reviewer-approved two-shot generations until it doubles its seed size

    The set is modified in place and returned. When the corpus runs out first, a warning
    is appended to `ces.warnings`.
    """
    error = ces.error_type
    if error.method != Method.TWO_SHOT_LLM:
        raise UsageError(f"{error.code} is not a two-shot error type; its CES cannot be enriched")
    if ces.is_full:
        logger.info("CES %s already holds %d entries, nothing to do", error.code, len(ces))
        return ces

    for index, sentence in enumerate(corpus):
        if ces.is_full:
            break
        rng = make_rng(derive_seed(seed, "enrich", error.code, index))
        outcome = generate_llm_example(client, error, sentence, rng, ces=ces, settings=settings, sleep=sleep)
        if not isinstance(outcome, ParallelExample):
            logger.debug("CES %s: sentence %d gave %s", error.code, index, type(outcome).__name__)
            continue
        try:
            entry = CesEntry(outcome.erroneous.raw, outcome.correct.raw, outcome.tags, Origin.LLM_GENERATED)
        except UsageError as e:
            logger.debug("CES %s: sentence %d rejected: %s", error.code, index, e)
            continue
        if reviewer.review(entry, error):
            ces.add(entry)

    if not ces.is_full:
        message = (f"CES {error.code}: corpus exhausted at {len(ces)} of {ces.capacity} entries")
        ces.warnings.append(message)
        logger.warning(message)
    return ces


def review_ces(ces: CorruptionExampleSet, reviewer: Reviewer) -> int:
    """Re-review LLM-generated entries, dropping rejected ones; returns how many were dropped"""
    removed = 0
    for entry in [e for e in ces.entries if e.origin == Origin.LLM_GENERATED]:
        if not reviewer.review(entry, ces.error_type):
            ces.remove(entry)
            removed += 1
    return removed
