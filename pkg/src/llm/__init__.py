from .ces_store import (
    CesEntry,
    CorruptionExampleSet,
    Origin,
    ces_filename,
    load_ces,
    load_ces_directory,
    save_ces,
)
from .llm_client import BoundedClient, FixtureClient, LlmClient, LlmRequest, LlmResponse, OpenAIClient
from .llm_generator import (
    AutoAcceptReviewer,
    GenerationFailure,
    InteractiveReviewer,
    LlmSettings,
    NoPartOfSpeech,
    Reviewer,
    enrich_ces,
    generate_llm_example,
    review_ces,
    validate_corruption,
)
from .prompts import INSTRUCTIONS, build_two_shot_prompt, build_zero_shot_prompt
from .response_parser import ParsedCorruption, Verdict, parse_llm_response, render_response
