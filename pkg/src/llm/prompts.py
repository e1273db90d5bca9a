"""
Zero-shot and two-shot corruption prompts (English prompting on a general-purpose model)
"""
from typing import Dict

from ..taxonomy.error_taxonomy import ErrorType, Method
from ..utils.errors import InsufficientExamplesError, UsageError

# error-specific instruction inserted after "For this task, "
INSTRUCTIONS: Dict[str, str] = {
    "ADJ:FORM": "you will have to change the degree of an adjective erroneously",
    "NOUN:POSS": "you will have to create a disagreement between a noun and its possessive article erroneously",
    "ADJ": "replace an adjective with one that is inappropriate for the sentence context, "
           "such that an erroneous sentence is created",
    "ADV": "use an adverb erroneously, such that an erroneous sentence is created",
    "MORPH": "replace a word with a different word stemming from the same root that is wrong in this context, "
             "such that an erroneous sentence is created",
    "NOUN": "use a noun inappropriately for the sentence context, such that an erroneous sentence is created",
    "NOUN:INFL": "change the plural inflection of a noun into an incorrect form, "
                 "such that an erroneous sentence is created",
    "NOUN:NUM": "change the number of a noun erroneously, such that an erroneous sentence is created",
    "VERB": "replace a verb with one that is inappropriate for the sentence context, "
            "such that an erroneous sentence is created",
    "VERB:FORM": "use an erroneous form of a verb, such that an erroneous sentence is created",
    "VERB:SVA": "create a disagreement between a verb and a subject in a sentence, "
                "such that an erroneous sentence is created",
    "VERB:TENSE": "change the tense of a verb so that it differs from the rest of the phrase, "
                  "such that an erroneous sentence is created",
}

ZERO_SHOT_TEMPLATE = (
    "You are a grammar assistant tasked with introducing common unacceptable errors within a correct "
    "Romanian language sentence. For this task, {instruction} in the following sentence: <<{sentence}>>. "
    "Think very carefully about the task at hand, and analyze each part of speech in detail. "
    "If the specified part of speech does not exist in the sentence, strictly reply with NO. "
    "Otherwise, reply strictly with the erroneous sentence, followed by Index: and the positions of "
    "the words you have changed."
)

TWO_SHOT_TEMPLATE = (
    "You are a grammar assistant tasked with introducing common unacceptable errors in a correct "
    "Romanian sentence. For this task, {instruction}.\n\n"
    "For example, the sentence <<{example1_correct}>> will be turned into <<{example1_erroneous}>>\n\n"
    "For example, the sentence <<{example2_correct}>> will be turned into <<{example2_erroneous}>>\n\n"
    "So, the sentence <<{sentence}>> will be turned into ANSWER.\n\n"
    "Think very carefully about the task at hand, and analyze each part of speech in detail. "
    "If the specified part of speech does not exist in the sentence, strictly reply with NO. "
    "Otherwise, reply strictly with the erroneous sentence, marked with ANSWER, followed by Index: "
    "and the positions of the words you have changed."
)


def instruction_for(error: ErrorType) -> str:
    return INSTRUCTIONS.get(
        error.code, f"introduce the following kind of error: {error.description.lower()}")


def build_zero_shot_prompt(error: ErrorType, sentence: str) -> str:
    if error.method != Method.ZERO_SHOT_LLM:
        raise UsageError(f"{error.code} is generated by {error.method.value}, not zero-shot prompting")
    return ZERO_SHOT_TEMPLATE.format(instruction=instruction_for(error), sentence=sentence)


def build_two_shot_prompt(error: ErrorType, sentence: str, ex1, ex2) -> str:
    """
    Fill the two-shot template; ex1 and ex2 are CES entries, embedded in the given order

    Raises:
        UsageError: error is not a two-shot type
        InsufficientExamplesError: an example is missing or both examples are the same
    """
    if error.method != Method.TWO_SHOT_LLM:
        raise UsageError(f"{error.code} is generated by {error.method.value}, not two-shot prompting")
    if ex1 is None or ex2 is None or ex1 == ex2:
        raise InsufficientExamplesError(f"two distinct {error.code} examples are needed for a two-shot prompt")
    return TWO_SHOT_TEMPLATE.format(
        instruction=instruction_for(error),
        example1_correct=ex1.correct,
        example1_erroneous=ex1.erroneous,
        example2_correct=ex2.correct,
        example2_erroneous=ex2.erroneous,
        sentence=sentence,
    )
