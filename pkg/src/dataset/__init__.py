from .corpus import DEFAULT_SOURCE_LABEL, CorpusSentence, example_id, parse_corpus_lines, read_corpus
from .dataset_io import audit_file, example_from_record, example_to_record, read_examples, write_examples
from .dataset_stats import CorpusStats, DatasetStats, compute_stats, keep_fraction
from .generator import GenerationEngines, corrupt_sentence, generate_dataset
from .splitter import SplitSpec, split
