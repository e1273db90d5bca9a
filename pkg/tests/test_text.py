"""
Unit tests for tokenization, tag sequences, alignment and parallel examples
"""
import unittest
import sys
import os

# Add project root to path
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.append(project_root)

ORDER_ERRONEOUS = ("Aprobată prin ORDINUL nr. 304 din 19 octombrie 2020, publicat în Monitorul cel mai Oficial "
                    "al României, Partea I, nr. 1026 din 4 noiembrie 2020.")
PROPOSAL_CORRECT = ("La data de 19 februarie 2018, propunerea legislativă a fost prezentată în Biroul permanent al "
                  "Camerei Deputaților și transmisă pentru raport și avize comisiilor de specialitate.")
MEASURES_CORRECT = ("Or, măsurile asiguratorii au un caracter provizoriu, finalitatea lor constând în garantarea "
                "exercitării obligațiilor cu caracter patrimonial, în cazul soluționării unui proces penal.")
MEASURES_ERRONEOUS = ("Încât să, măsurile asiguratorii au un caracter provizoriu, finalitatea lor constând în garantarea "
                  "exercităriiobligațiilor cu caracter patrimonial, în cazul soluționării unui proces peual.")
MEASURES_TAGS = "CONJ CONJ O O O O O O O O O O O O O ORTH O O O O O O O O O SPELL O"


class TestTokenizer(unittest.TestCase):
    """Test the tokenizer and detokenizer"""

    def setUp(self):
        from src.text.tokenizer import TokenKind, detokenize, tokenize
        self.tokenize = tokenize
        self.detokenize = detokenize
        self.TokenKind = TokenKind

    def test_order_sentence_indices(self):
        texts = self.tokenize(ORDER_ERRONEOUS).texts
        self.assertEqual(len(texts), 31)
        self.assertEqual(texts[14:17], ["cel", "mai", "Oficial"])
        self.assertEqual(texts[3:5], ["nr", "."])
        self.assertEqual(texts[25], "1026")

    def test_proposal_sentence_length(self):
        texts = self.tokenize(PROPOSAL_CORRECT).texts
        self.assertEqual(len(texts), 28)
        self.assertEqual(texts[11], "prezentată")

    def test_clitic_cluster(self):
        self.assertEqual(self.tokenize("Mi s-a făcut vrăji.").texts, ["Mi", "s-a", "făcut", "vrăji", "."])

    def test_empty(self):
        self.assertEqual(self.tokenize("").tokens, ())
        self.assertEqual(self.detokenize([]), "")

    def test_token_kinds_and_spans(self):
        sentence = self.tokenize("Valoarea este de 1.250.000 lei.")
        kinds = [t.kind for t in sentence.tokens]
        self.assertEqual(kinds, [self.TokenKind.WORD, self.TokenKind.WORD, self.TokenKind.WORD,
                                 self.TokenKind.NUMERAL, self.TokenKind.WORD, self.TokenKind.PUNCT])
        for token in sentence.tokens:
            self.assertEqual(sentence.raw[token.start:token.end], token.text)

    def test_symbols_are_not_punctuation(self):
        sentence = self.tokenize("Dobânda crește cu 5 % + 2 $ (anual).")
        kinds = {t.text: t.kind for t in sentence.tokens}
        for symbol in ("%", "+", "$"):
            self.assertEqual(kinds[symbol], self.TokenKind.SYMBOL, symbol)
        for mark in ("(", ")", "."):
            self.assertEqual(kinds[mark], self.TokenKind.PUNCT, mark)

    def test_detokenize_punctuation(self):
        self.assertEqual(self.detokenize(["Unde", "mergeți", ",", "doamnă", "?"]), "Unde mergeți, doamnă?")
        self.assertEqual(self.detokenize(["art", ".", "5", "alin", ".", "(", "2", ")"]), "art. 5 alin. (2)")

    def test_round_trip_on_corpus(self):
        from src.dataset.corpus import read_corpus
        corpus = read_corpus(os.path.join(project_root, "data", "sample_corpus", "legal_sample.txt"))
        self.assertGreater(len(corpus), 20)
        for item in corpus:
            self.assertEqual(self.detokenize(self.tokenize(item.text).tokens), item.text)

    def test_rebuild_from_raw_and_texts(self):
        from src.text.tokenizer import Sentence
        sentence = self.tokenize(MEASURES_ERRONEOUS)
        self.assertEqual(Sentence.from_raw_and_texts(sentence.raw, sentence.texts), sentence)


class TestTags(unittest.TestCase):
    """Test tag sequences and index conversion"""

    def setUp(self):
        from src.text.tags import TagSequence, indices_to_tags
        self.TagSequence = TagSequence
        self.indices_to_tags = indices_to_tags

    def test_order_sentence_tags(self):
        tags = self.indices_to_tags(31, [14, 15, 16], "ADJ:FORM")
        self.assertEqual(tags.error_positions(), [14, 15, 16])
        self.assertEqual(tags[14], "ADJ:FORM")
        self.assertEqual(tags[13], "O")

    def test_proposal_sentence_tags(self):
        tags = self.indices_to_tags(28, [11], "VERB:SVA")
        self.assertEqual(tags.as_string(), " ".join(["O"] * 11 + ["VERB:SVA"] + ["O"] * 16))

    def test_no_indices(self):
        self.assertEqual(list(self.indices_to_tags(5, [], "SPELL")), ["O"] * 5)

    def test_out_of_range(self):
        from src.utils.errors import TagValidationError
        with self.assertRaises(TagValidationError) as ctx:
            self.indices_to_tags(5, [2, 7], "SPELL")
        self.assertEqual(ctx.exception.index, 7)

    def test_string_form(self):
        tags = self.TagSequence.from_string(MEASURES_TAGS)
        self.assertEqual(len(tags), 27)
        self.assertEqual(tags.error_types(), ["CONJ", "ORTH", "SPELL"])
        self.assertEqual(tags.as_string(), MEASURES_TAGS)


class TestAlignment(unittest.TestCase):
    """Test alignment-based tag derivation"""

    def setUp(self):
        from src.text.alignment import diff_tags, edit_distance
        from src.text.tokenizer import tokenize
        self.diff_tags = diff_tags
        self.edit_distance = edit_distance
        self.tokenize = tokenize

    def test_identical(self):
        sentence = self.tokenize("Am mers ieri la doctor.")
        self.assertFalse(self.diff_tags(sentence, sentence, "SPELL").has_errors())

    def test_word_order(self):
        tags = self.diff_tags(self.tokenize("Au mai rămas"), self.tokenize("Mai au rămas"), "WO")
        self.assertEqual(list(tags), ["WO", "WO", "O"])

    def test_substitution(self):
        tags = self.diff_tags(self.tokenize("a b c d"), self.tokenize("a x c d"), "SPELL")
        self.assertEqual(list(tags), ["O", "SPELL", "O", "O"])

    def test_insertion_span(self):
        correct = self.tokenize("Aprobată prin ORDINUL nr. 304 din 19 octombrie 2020, publicat în Monitorul Oficial "
                                "al României, Partea I, nr. 1026 din 4 noiembrie 2020.")
        tags = self.diff_tags(correct, self.tokenize(ORDER_ERRONEOUS), "ADJ:FORM")
        self.assertEqual(tags.error_positions(), [14, 15])

    def test_edit_distance(self):
        self.assertEqual(self.edit_distance(list("kitten"), list("sitting")), 3)
        self.assertEqual(self.edit_distance([], ["a"]), 1)


class TestParallelExample(unittest.TestCase):
    """Test example invariants"""

    def setUp(self):
        from src.text.parallel_example import ParallelExample
        from src.text.tags import TagSequence
        from src.text.tokenizer import tokenize
        self.ParallelExample = ParallelExample
        self.TagSequence = TagSequence
        self.tokenize = tokenize

    def make(self, correct, erroneous, tags, injected):
        return self.ParallelExample("x", "MARCELL-RO", self.tokenize(correct), self.tokenize(erroneous),
                                    self.TagSequence.from_string(tags), tuple(injected), 0)

    def test_measures_sentence_is_valid(self):
        example = self.make(MEASURES_CORRECT, MEASURES_ERRONEOUS, MEASURES_TAGS, ["CONJ", "ORTH", "SPELL"])
        self.assertEqual(example.violations(), [])

    def test_adjective_span_is_valid(self):
        correct = ORDER_ERRONEOUS.replace("cel mai ", "")
        tags = " ".join(["O"] * 14 + ["ADJ:FORM"] * 3 + ["O"] * 14)
        self.assertTrue(self.make(correct, ORDER_ERRONEOUS, tags, ["ADJ:FORM"]).is_valid())

    def test_length_mismatch(self):
        example = self.make("a b c", "a x c", "O SPELL", ["SPELL"])
        self.assertTrue(example.violations())

    def test_tag_not_injected(self):
        example = self.make("a b c", "a x c", "O SPELL O", ["WO"])
        self.assertTrue(any("injected" in v for v in example.violations()))

    def test_unchanged_sentence_with_tags(self):
        example = self.make("a b c", "a b c", "O SPELL O", ["SPELL"])
        self.assertFalse(example.is_valid())

    def test_tag_on_unchanged_token(self):
        example = self.make("a b c", "a x c", "O O SPELL", ["SPELL"])
        self.assertFalse(example.is_valid())
        self.assertEqual(example.violations(strict_positions=False), [])


if __name__ == "__main__":
    unittest.main()
