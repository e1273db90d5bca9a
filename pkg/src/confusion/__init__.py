from .confusion_generator import ConfusionGenerator, confusion_from_section, load_confusion_config
from .confusion_lists import DEFAULT_LISTS, LIST_PRIORITY, ConfusionLists, corrupt_function_words
from .punct_matrix import PunctMatrix, corrupt_punctuation
