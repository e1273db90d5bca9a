"""
Unit tests for corpus reading, dataset generation, serialization, splitting and statistics
"""
import unittest
import sys
import os
import json
import tempfile

# Add project root to path
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.append(project_root)

SAMPLE_CORPUS = os.path.join(project_root, "data", "sample_corpus", "legal_sample.txt")
FIXTURES_PATH = os.path.join(project_root, "data", "llm_fixtures", "recorded_exchanges.jsonl")

MEASURES_CORRECT = ("Or, măsurile asiguratorii au un caracter provizoriu, finalitatea lor constând în garantarea "
                "exercitării obligațiilor cu caracter patrimonial, în cazul soluționării unui proces penal.")
MEASURES_ERRONEOUS = ("Încât să, măsurile asiguratorii au un caracter provizoriu, finalitatea lor constând în garantarea "
                  "exercităriiobligațiilor cu caracter patrimonial, în cazul soluționării unui proces peual.")
MEASURES_TAGS = "CONJ CONJ O O O O O O O O O O O O O ORTH O O O O O O O O O SPELL O"


def measures_example(example_id="measures", source_corpus="MARCELL-RO"):
    from src.text.parallel_example import ParallelExample
    from src.text.tags import TagSequence
    from src.text.tokenizer import tokenize
    return ParallelExample(example_id, source_corpus, tokenize(MEASURES_CORRECT), tokenize(MEASURES_ERRONEOUS),
                           TagSequence.from_string(MEASURES_TAGS), ("CONJ", "ORTH", "SPELL"), 17,
                           planned="CONJ", method="confusion_list")


def simple_example(example_id, source_corpus, correct="Am mers la doctor.", erroneous=None, tags=None):
    from src.text.parallel_example import ParallelExample
    from src.text.tags import TagSequence
    from src.text.tokenizer import tokenize
    erroneous = erroneous or correct
    tag_sequence = TagSequence.from_string(tags) if tags else TagSequence.all_ok(len(tokenize(erroneous)))
    return ParallelExample(example_id, source_corpus, tokenize(correct), tokenize(erroneous),
                           tag_sequence, tuple(tag_sequence.error_types()), 0)


class TestCorpus(unittest.TestCase):
    """Test clean corpus reading"""

    def setUp(self):
        from src.dataset.corpus import example_id, parse_corpus_lines
        self.parse = parse_corpus_lines
        self.example_id = example_id

    def test_labels_and_indices(self):
        sentences = self.parse(["Prima frază.\n", "\n", "Europarl-RO\tA doua  frază.\n", "A treia frază.\n"])
        self.assertEqual([(s.source_corpus, s.index) for s in sentences],
                         [("MARCELL-RO", 0), ("Europarl-RO", 0), ("MARCELL-RO", 1)])
        self.assertEqual(sentences[1].text, "A doua frază.")

    def test_empty_label(self):
        from src.utils.errors import DatasetReadError
        with self.assertRaises(DatasetReadError) as ctx:
            self.parse(["Prima frază.", "\tFără etichetă."])
        self.assertEqual(ctx.exception.line_number, 2)

    def test_stable_ids(self):
        self.assertEqual(self.example_id("MARCELL-RO", 3), self.example_id("MARCELL-RO", 3))
        self.assertNotEqual(self.example_id("MARCELL-RO", 3), self.example_id("Europarl-RO", 3))
        self.assertEqual(len(self.example_id("MARCELL-RO", 3)), 16)

    def test_sample_corpus(self):
        from src.dataset.corpus import read_corpus
        corpus = read_corpus(SAMPLE_CORPUS)
        labels = {s.source_corpus for s in corpus}
        self.assertEqual(labels, {"MARCELL-RO", "Europarl-RO"})


class TestGenerator(unittest.TestCase):
    """Test routing of sentences to the generation engines"""

    def setUp(self):
        from config.config import load_toolkit_config
        from src.dataset.corpus import CorpusSentence, read_corpus
        from src.dataset.generator import GenerationEngines, corrupt_sentence, generate_dataset
        from src.llm.ces_store import load_ces_directory
        from src.llm.llm_client import FixtureClient
        from src.noise.noise_injector import NoiseInjector
        from src.text.tokenizer import tokenize
        self.config = load_toolkit_config()
        self.taxonomy = self.config.taxonomy()
        self.corpus = read_corpus(SAMPLE_CORPUS)
        self.CorpusSentence = CorpusSentence
        self.corrupt_sentence = corrupt_sentence
        self.generate_dataset = generate_dataset
        vocabulary = NoiseInjector.build_vocabulary(tokenize(s.text) for s in self.corpus)
        self.engines = GenerationEngines.from_config(
            self.config, vocabulary,
            llm=FixtureClient.from_file(FIXTURES_PATH, miss_response="NO"),
            ces=load_ces_directory(os.path.join(project_root, "data", "ces_seed"), self.taxonomy))

    def item(self, text, index=0):
        return self.CorpusSentence("MARCELL-RO", index, text)

    def plan(self, codes):
        from src.taxonomy.error_taxonomy import ErrorPlan
        return ErrorPlan(tuple(self.taxonomy.get(code) for code in codes))

    def test_confusion_routing(self):
        example = self.corrupt_sentence(self.item("Casa este lângă parc, în centru."),
                                        self.taxonomy.get("PREP"), self.engines, seed=1)
        self.assertEqual(example.method, "confusion_list")
        self.assertEqual(example.planned, "PREP")
        self.assertTrue(set(example.tags.error_types()) <= {"PREP"})

    def test_noise_routing(self):
        example = self.corrupt_sentence(self.item(self.corpus[5].text), self.taxonomy.get("SPELL"),
                                        self.engines, seed=1)
        self.assertEqual(example.method, "noise_injection")
        self.assertTrue(example.is_valid())

    def test_llm_without_client_falls_back_to_noise(self):
        self.engines.llm = None
        example = self.corrupt_sentence(self.item(self.corpus[0].text), self.taxonomy.get("ADJ:FORM"),
                                        self.engines, seed=1)
        self.assertEqual(example.planned, "ADJ:FORM")
        self.assertEqual(example.method, "noise_injection")

    def test_llm_fixture_exchanges(self):
        corpus = [self.item(self.corpus[0].text, 0), self.item(self.corpus[1].text, 1)]
        examples = list(self.generate_dataset(corpus, self.plan(["ADJ:FORM", "VERB:SVA"]), self.engines,
                                              seed=5, max_workers=2))
        self.assertEqual(len(examples), 2)
        adjective, agreement = examples
        self.assertEqual(adjective.method, "zero_shot_llm")
        self.assertEqual(adjective.tags.error_positions(), [14, 15, 16])
        self.assertEqual(agreement.method, "two_shot_llm")
        self.assertEqual(agreement.tags.error_positions(), [11])
        self.assertEqual(agreement.erroneous.texts[11], "prezentat")

    def test_deterministic_across_workers(self):
        from src.dataset.dataset_io import example_to_record
        from src.taxonomy.error_taxonomy import plan_errors
        plan = plan_errors(len(self.corpus), self.taxonomy.shares(), seed=3)
        first = [example_to_record(e) for e in self.generate_dataset(self.corpus, plan, self.engines, 3, 1)]
        second = [example_to_record(e) for e in self.generate_dataset(self.corpus, plan, self.engines, 3, 4)]
        self.assertEqual(first, second)
        order = [s.example_id for s in self.corpus]
        positions = [order.index(r["id"]) for r in first]
        self.assertEqual(positions, sorted(positions))

    def test_plan_too_short(self):
        from src.utils.errors import UsageError
        with self.assertRaises(UsageError):
            list(self.generate_dataset(self.corpus, self.plan(["SPELL"]), self.engines, seed=1))

    def test_desk_corpus(self):
        from src.dataset.dataset_stats import compute_stats
        from src.taxonomy.error_taxonomy import plan_errors
        corpus = [self.CorpusSentence(s.source_corpus, i, s.text)
                  for i, s in enumerate(self.corpus[j % len(self.corpus)] for j in range(1000))]
        plan = plan_errors(len(corpus), self.taxonomy.shares(), seed=11)
        progress = []
        examples = list(self.generate_dataset(corpus, plan, self.engines, seed=11, on_progress=progress.append))
        self.assertEqual(sum(progress), 1000)
        self.assertGreaterEqual(len(examples), 990)
        for example in examples:
            self.assertEqual(len(example.tags), len(example.erroneous))
            self.assertEqual(example.violations(), [], example.id)
        stats = compute_stats(examples)
        self.assertGreaterEqual(stats.total.error_rate, 0.18)
        self.assertLessEqual(stats.total.error_rate, 0.30)


class TestDatasetIO(unittest.TestCase):
    """Test JSONL serialization"""

    def setUp(self):
        from src.dataset.dataset_io import audit_file, read_examples, write_examples
        self.read_examples = read_examples
        self.write_examples = write_examples
        self.audit_file = audit_file
        self.tmp = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.tmp.name, "dataset.jsonl")

    def tearDown(self):
        self.tmp.cleanup()

    def test_round_trip(self):
        examples = [measures_example(), simple_example("b", "Europarl-RO")]
        self.assertEqual(self.write_examples(examples, self.path), 2)
        self.assertEqual(list(self.read_examples(self.path)), examples)

    def test_record_fields(self):
        self.write_examples([measures_example()], self.path)
        with open(self.path, "r", encoding="utf-8") as f:
            record = json.loads(f.readline())
        self.assertEqual(record["tags_string"], MEASURES_TAGS)
        self.assertEqual(record["injected"], ["CONJ", "ORTH", "SPELL"])
        self.assertEqual(len(record["erroneous_tokens"]), 27)
        self.assertEqual(record["erroneous"], MEASURES_ERRONEOUS)

    def test_empty_stream(self):
        self.assertEqual(self.write_examples([], self.path), 0)
        self.assertEqual(list(self.read_examples(self.path)), [])

    def test_truncated_line(self):
        from src.utils.errors import DatasetReadError
        self.write_examples([measures_example()], self.path)
        with open(self.path, "a", encoding="utf-8") as f:
            f.write('{"id": "broken", "correct": "Am mers')
        with self.assertRaises(DatasetReadError) as ctx:
            list(self.read_examples(self.path))
        self.assertEqual(ctx.exception.line_number, 2)

    def test_audit(self):
        bad = simple_example("bad", "MARCELL-RO", tags="O SPELL O O O")
        self.write_examples([measures_example(), bad], self.path)
        problems = self.audit_file(self.path)
        self.assertEqual([(line, example_id) for line, example_id, _ in problems], [(2, "bad")])


class TestSplitter(unittest.TestCase):
    """Test train/test partitioning"""

    def setUp(self):
        from src.dataset.splitter import SplitSpec, split
        self.SplitSpec = SplitSpec
        self.split = split
        self.mixed = [simple_example(str(i), "MARCELL-RO" if i % 2 else "Europarl-RO") for i in range(1000)]

    def test_plain_split(self):
        train, test = self.split(self.mixed, self.SplitSpec(0.9), seed=1)
        self.assertEqual((len(train), len(test)), (900, 100))
        self.assertEqual({e.id for e in train} | {e.id for e in test}, {e.id for e in self.mixed})
        self.assertEqual([e.id for e in train], sorted((e.id for e in train), key=int))

    def test_filtered_split(self):
        train, test = self.split(self.mixed, self.SplitSpec(0.9, "Europarl-RO"), seed=1)
        self.assertEqual((len(train), len(test)), (900, 100))
        self.assertTrue(all(e.source_corpus == "Europarl-RO" for e in test))

    def test_deterministic(self):
        first = self.split(self.mixed, self.SplitSpec(0.9), seed=4)[1]
        second = self.split(self.mixed, self.SplitSpec(0.9), seed=4)[1]
        self.assertEqual([e.id for e in first], [e.id for e in second])

    def test_large_set_arithmetic(self):
        examples = [simple_example("x", "MARCELL-RO")] * 350000
        _, test = self.split(examples, self.SplitSpec(0.9), seed=0)
        self.assertEqual(len(test), 35000)

    def test_filter_shortfall(self):
        from src.utils.errors import SplitError
        examples = [simple_example(str(i), "Europarl-RO" if i < 50 else "MARCELL-RO") for i in range(1000)]
        with self.assertRaises(SplitError) as ctx:
            self.split(examples, self.SplitSpec(0.9, "Europarl-RO"), seed=1)
        self.assertEqual(ctx.exception.shortfall, 50)

    def test_bad_fraction(self):
        from src.utils.errors import ConfigurationError
        with self.assertRaises(ConfigurationError):
            self.SplitSpec(1.0)
        with self.assertRaises(ConfigurationError):
            self.SplitSpec(0.0)


class TestDatasetStats(unittest.TestCase):
    """Test corpus statistics"""

    def setUp(self):
        from src.dataset.dataset_stats import compute_stats
        self.compute_stats = compute_stats

    def test_toy_set(self):
        examples = [
            simple_example("a", "MARCELL-RO", "a b c", "a x c", "O SPELL O"),
            simple_example("b", "MARCELL-RO", "d e f", "d e f"),
            simple_example("c", "Europarl-RO", "g h i j", "g h y j", "O O PUNCT O"),
        ]
        stats = self.compute_stats(examples)
        self.assertEqual(stats.total.token_count, 10)
        self.assertEqual(stats.total.erroneous_token_count, 2)
        self.assertAlmostEqual(stats.total.error_rate, 0.2, delta=1e-9)
        self.assertEqual(stats.per_corpus["MARCELL-RO"].sentence_count, 2)
        self.assertEqual(stats.total.type_shares(), {"PUNCT": 0.5, "SPELL": 0.5})

    def test_measures_example(self):
        stats = self.compute_stats([measures_example()])
        self.assertEqual(stats.total.token_count, 27)
        self.assertEqual(stats.total.erroneous_token_count, 4)
        self.assertEqual(dict(stats.total.type_counts), {"CONJ": 2, "ORTH": 1, "SPELL": 1})
        self.assertIsNone(stats.keep_fraction)

    def test_frames(self):
        stats = self.compute_stats([measures_example(), simple_example("b", "Europarl-RO")])
        frame = stats.to_frame()
        self.assertEqual(list(frame.index), ["Europarl-RO", "MARCELL-RO", "Total"])
        self.assertEqual(int(frame.loc["Total", "token_count"]), 27 + 5)
        types = stats.type_frame()
        self.assertEqual(types.index[0], "CONJ")
        self.assertAlmostEqual(types["share"].sum(), 1.0)

    def test_keep_fraction(self):
        from src.dataset.dataset_stats import keep_fraction
        unchanged = simple_example("a", "MARCELL-RO")
        self.assertEqual(keep_fraction([unchanged]), 1.0)
        misspelled = simple_example("b", "MARCELL-RO", "Am mers la doctor.", "Am mrs la doctor.", "O SPELL O O O")
        self.assertAlmostEqual(keep_fraction([misspelled]), 0.75)
        # "mers" is followed by an inserted word, so it no longer counts as untouched
        inserted = simple_example("c", "MARCELL-RO", "Am mers la doctor.", "Am mers ieri la doctor.", "O O SPELL O O O")
        self.assertAlmostEqual(keep_fraction([inserted]), 0.75)
        swapped = simple_example("d", "MARCELL-RO", "Am mers la doctor.", "Am la mers doctor.", "O WO WO O O")
        self.assertAlmostEqual(keep_fraction([swapped]), 0.5)


if __name__ == "__main__":
    unittest.main()
