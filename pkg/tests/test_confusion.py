"""
Unit tests for confusion lists and the punctuation matrix
"""
import unittest
import sys
import os
import tempfile

# Add project root to path
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.append(project_root)


class TestConfusionLists(unittest.TestCase):
    """Test function-word substitution"""

    def setUp(self):
        from src.confusion.confusion_lists import ConfusionLists, corrupt_function_words
        from src.text.tokenizer import tokenize
        from src.utils.seeding import make_rng
        self.ConfusionLists = ConfusionLists
        self.corrupt = corrupt_function_words
        self.tokenize = tokenize
        self.make_rng = make_rng

    def test_preposition_list(self):
        lists = self.ConfusionLists()
        self.assertEqual(len(lists.lists["PREP"]), 35)
        self.assertEqual(lists.lookup("lângă"), "PREP")
        self.assertEqual(lists.lookup("Și"), "CONJ")

    def test_priority(self):
        lists = self.ConfusionLists({"PREP": ("cu", "la"), "CONJ": ("cu", "și")})
        self.assertEqual(lists.lookup("cu"), "PREP")

    def test_two_member_list(self):
        lists = self.ConfusionLists({"PREP": ("lângă", "primprejur")})
        erroneous, tags = self.corrupt(self.tokenize("Casa este lângă parc."), lists, 1.0, self.make_rng(0))
        self.assertEqual(erroneous.texts, ["Casa", "este", "primprejur", "parc", "."])
        self.assertEqual(list(tags), ["O", "O", "PREP", "O", "O"])

    def test_case_preserved(self):
        lists = self.ConfusionLists({"PREP": ("în", "la")})
        erroneous, _ = self.corrupt(self.tokenize("În sală."), lists, 1.0, self.make_rng(0))
        self.assertEqual(erroneous.texts[0], "La")

    def test_probability_zero(self):
        sentence = self.tokenize("Am mers la doctor și la farmacie.")
        erroneous, tags = self.corrupt(sentence, self.ConfusionLists(), 0.0, self.make_rng(0))
        self.assertEqual(erroneous, sentence)
        self.assertFalse(tags.has_errors())

    def test_only_restricts_types(self):
        sentence = self.tokenize("Am mers la doctor și la farmacie.")
        _, tags = self.corrupt(sentence, self.ConfusionLists(), 1.0, self.make_rng(0), only={"CONJ"})
        self.assertEqual(tags.error_types(), ["CONJ"])
        self.assertEqual(tags.error_positions(), [4])

    def test_substitution_rate(self):
        sentence = self.tokenize("Casa este lângă parc.")
        lists = self.ConfusionLists()
        rng = self.make_rng(11)
        trials = 40000
        changed = sum(self.corrupt(sentence, lists, 0.3, rng)[1].has_errors() for _ in range(trials))
        self.assertAlmostEqual(changed / trials, 0.3, delta=0.01)

    def test_bad_lists(self):
        from src.utils.errors import ConfigurationError
        with self.assertRaises(ConfigurationError):
            self.ConfusionLists({"NOUN": ("casă",)})
        with self.assertRaises(ConfigurationError):
            self.ConfusionLists({"PREP": ()})
        with self.assertRaises(ConfigurationError):
            self.corrupt(self.tokenize("la"), self.ConfusionLists(), 1.5, self.make_rng(0))


class TestPunctMatrix(unittest.TestCase):
    """Test the punctuation transition matrix"""

    def setUp(self):
        from src.confusion.punct_matrix import PunctMatrix, corrupt_punctuation
        from src.text.tokenizer import tokenize
        from src.utils.seeding import make_rng
        self.PunctMatrix = PunctMatrix
        self.corrupt = corrupt_punctuation
        self.tokenize = tokenize
        self.make_rng = make_rng

    def test_rows_sum_to_one(self):
        matrix = self.PunctMatrix.default()
        for row in matrix.rows:
            self.assertAlmostEqual(sum(row), 1.0)
        self.assertAlmostEqual(matrix.probability(";", ","), 0.25)

    def test_semicolon_to_comma_rate(self):
        matrix = self.PunctMatrix.default()
        rng = self.make_rng(21)
        trials = 10000
        commas = sum(matrix.draw(";", rng) == "," for _ in range(trials))
        self.assertAlmostEqual(commas / trials, 0.25, delta=0.02)

    def test_identity_changes_nothing(self):
        sentence = self.tokenize("Da; nu, poate.")
        erroneous, tags = self.corrupt(sentence, self.PunctMatrix.identity(), self.make_rng(0))
        self.assertEqual(erroneous, sentence)
        self.assertFalse(tags.has_errors())

    def test_forced_change_is_tagged(self):
        matrix = self.PunctMatrix.from_transitions({";": {",": 1.0}, ",": {",": 1.0}}, (";", ","))
        erroneous, tags = self.corrupt(self.tokenize("Da; nu."), matrix, self.make_rng(0))
        self.assertEqual(erroneous.texts, ["Da", ",", "nu", "."])
        self.assertEqual(list(tags), ["O", "PUNCT", "O", "O"])

    def test_bad_rows(self):
        from src.utils.errors import ConfigurationError
        with self.assertRaises(ConfigurationError):
            self.PunctMatrix((".", ","), ((0.5, 0.4), (0.0, 1.0)))
        with self.assertRaises(ConfigurationError):
            self.PunctMatrix((".", ","), ((1.0, 0.0),))
        with self.assertRaises(ConfigurationError):
            self.PunctMatrix.from_transitions({".": {"?": 1.0}}, (".",))


class TestConfusionGenerator(unittest.TestCase):
    """Test routing and YAML loading"""

    def setUp(self):
        from src.confusion.confusion_generator import ConfusionGenerator, load_confusion_config
        from src.text.tokenizer import tokenize
        from src.utils.seeding import make_rng
        self.ConfusionGenerator = ConfusionGenerator
        self.load_confusion_config = load_confusion_config
        self.tokenize = tokenize
        self.make_rng = make_rng

    def test_routes_punct(self):
        from src.confusion.punct_matrix import PunctMatrix
        matrix = PunctMatrix.from_transitions({".": {"!": 1.0}, "!": {"!": 1.0}}, (".", "!"))
        generator = self.ConfusionGenerator(matrix=matrix)
        erroneous, tags = generator.corrupt(self.tokenize("Am plecat la mare."), "PUNCT", self.make_rng(0))
        self.assertEqual(erroneous.texts[-1], "!")
        self.assertEqual(tags.error_types(), ["PUNCT"])

    def test_unknown_code(self):
        from src.utils.errors import ConfigurationError
        with self.assertRaises(ConfigurationError):
            self.ConfusionGenerator().corrupt(self.tokenize("Am plecat."), "SPELL", self.make_rng(0))

    def test_load_default_config(self):
        lists, matrix = self.load_confusion_config(os.path.join(project_root, "config", "default_config.yaml"))
        self.assertEqual(lists.lookup("la"), "PREP")
        self.assertAlmostEqual(matrix.probability(";", ","), 0.25)

    def test_load_partial_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "confusion.yaml")
            with open(path, "w", encoding="utf-8") as f:
                f.write("lists:\n  DET: [un, o]\n")
            lists, matrix = self.load_confusion_config(path)
        self.assertEqual(lists.lists["DET"], ("un", "o"))
        self.assertEqual(len(lists.lists["PREP"]), 35)
        self.assertEqual(matrix.symbols, (".", ",", ";", ":", "?", "!"))

    def test_missing_file(self):
        from src.utils.errors import ConfigurationError
        with self.assertRaises(ConfigurationError):
            self.load_confusion_config("/nonexistent/confusion.yaml")


if __name__ == "__main__":
    unittest.main()
