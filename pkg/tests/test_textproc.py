import os
import sys
import tempfile
import unittest
from pathlib import Path

from hypothesis import given
from hypothesis import strategies as st

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../src')))

from semnet.network import load_network
from semnet.textproc import (NormalizationMap, Sentence, StopList, content_words, document_words,
                             load_normalization, load_stoplist, normalize, prepare, resolve, segment, tokenize)
from util.errors import InputError, ParseError, ValidationError

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

class TestSegment(unittest.TestCase):
    def test_punctuation(self):
        sentences = segment("A b. C d.")
        self.assertEqual([s.tokens for s in sentences], [("a", "b"), ("c", "d")])
        self.assertEqual([s.id for s in sentences], [0, 1])

    def test_empty(self):
        self.assertEqual(segment(""), [])
        self.assertEqual(segment("   \n "), [])

    def test_line_mode(self):
        sentences = segment("one line\nsecond. still second\nthird", line_sentences=True)
        self.assertEqual([s.id for s in sentences], [0, 1, 2])
        self.assertEqual(sentences[1].tokens, ("second", "still", "second"))

    def test_line_mode_keeps_blank_lines(self):
        sentences = segment("first\n\nthird", line_sentences=True)
        self.assertEqual([s.raw for s in sentences], ["first", "", "third"])

    def test_question_and_exclamation(self):
        self.assertEqual(len(segment("Really? Yes! Fine.")), 3)

    def test_tokenize(self):
        self.assertEqual(tokenize("The Seller's shop, in Paris!"), ("the", "seller", "s", "shop", "in", "paris"))

    @given(st.text(alphabet="ab .!?\n", max_size=60))
    def test_raws_recover_text(self, text):
        sentences = segment(text)
        self.assertEqual(" ".join(s.raw for s in sentences), " ".join(text.split()))

class TestContentWords(unittest.TestCase):
    def test_stoplist(self):
        sentence = Sentence(0, "the seller of flowers", ("the", "seller", "of", "flowers"))
        self.assertEqual(content_words(sentence, StopList(frozenset({"the", "of"}))), {"seller", "flowers"})
        self.assertEqual(content_words(sentence, StopList(frozenset(sentence.tokens))), frozenset())
        self.assertEqual(content_words(sentence, StopList()), set(sentence.tokens))

    def test_stoplist_case_folded(self):
        self.assertIn("THE", StopList(frozenset({"the"})))

class TestNormalize(unittest.TestCase):
    def setUp(self):
        self.norm = NormalizationMap({"acme": "company", "widgetco": "company"})

    def test_apply(self):
        self.assertEqual(normalize(("acme", "buys", "widgetco"), self.norm), ("company", "buys", "company"))
        self.assertEqual(normalize(("acme", "buys"), None), ("acme", "buys"))
        self.assertEqual(normalize(("acme", "buys"), NormalizationMap()), ("acme", "buys"))

    def test_idempotent(self):
        once = normalize(("acme", "buys", "widgetco"), self.norm)
        self.assertEqual(normalize(once, self.norm), once)

    def test_overlap_rejected(self):
        with self.assertRaises(ValidationError):
            NormalizationMap({"acme": "company", "company": "firm"})

    def test_replacement_resolves(self):
        lexicon = load_network((FIXTURES / "lexicon.json").read_bytes())
        sentence = segment("Acme will buy WidgetCo next year.")[0]
        words = prepare(sentence, load_stoplist(str(FIXTURES / "stop_en.txt")), self.norm)
        self.assertEqual(words, {"company", "buy", "next", "year"})
        self.assertEqual(resolve(words, lexicon).resolved, {"company", "buy"})

class TestResolve(unittest.TestCase):
    def setUp(self):
        self.network = load_network((FIXTURES / "fig1.json").read_bytes())

    def test_resolve(self):
        result = resolve({"seller", "florist"}, self.network)
        self.assertEqual(result.resolved, {"seller", "florist"})
        self.assertEqual(result.unresolved, frozenset())

        result = resolve({"seller", "zebra"}, self.network)
        self.assertEqual(result.resolved, {"seller"})
        self.assertEqual(result.unresolved, {"zebra"})

    def test_all_senses(self):
        lexicon = load_network((FIXTURES / "lexicon.json").read_bytes())
        self.assertEqual(resolve({"bank"}, lexicon).resolved, {"bank#finance", "bank#river"})

    def test_union_compatible(self):
        x, y = {"seller", "zebra"}, {"sell", "florist"}
        both = resolve(x | y, self.network)
        self.assertEqual(both.resolved, resolve(x, self.network).resolved | resolve(y, self.network).resolved)
        self.assertEqual(both.unresolved, resolve(x, self.network).unresolved | resolve(y, self.network).unresolved)

class TestLoaders(unittest.TestCase):
    def setUp(self):
        self.test_dir = tempfile.TemporaryDirectory()
        self.root = Path(self.test_dir.name)

    def tearDown(self):
        self.test_dir.cleanup()

    def test_stoplist_files(self):
        english = load_stoplist(str(FIXTURES / "stop_en.txt"))
        self.assertIn("the", english)
        self.assertNotIn("# English empty words", english)
        self.assertIn("les", load_stoplist(str(FIXTURES / "stop_fr.txt")))
        self.assertEqual(len(load_stoplist(None)), 0)

    def test_missing_stoplist(self):
        with self.assertRaises(InputError):
            load_stoplist(str(self.root / "missing.txt"))

    def test_normalization_file(self):
        norm = load_normalization(str(FIXTURES / "normalize_en.tsv"))
        self.assertEqual(norm.get("Globex"), "company")
        self.assertIsNone(load_normalization(None))

    def test_bad_normalization_line(self):
        path = self.root / "bad.tsv"
        path.write_text("acme company\n", encoding="utf-8")
        with self.assertRaises(ParseError):
            load_normalization(str(path))

    def test_document_words(self):
        words = document_words("The seller. The florist!", StopList(frozenset({"the"})))
        self.assertEqual(words, {"seller", "florist"})

if __name__ == '__main__':
    unittest.main()
