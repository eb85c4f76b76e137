import os
import sys
import unittest
from pathlib import Path

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../src')))

from semnet.apps.expansion import (ExpansionRequest, Mechanism, expand, format_expansion, parse_mechanisms,
                                   resolve_link_types)
from semnet.network import load_network
from util.errors import InputError, UnresolvableError

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

class TestExpand(unittest.TestCase):
    def setUp(self):
        self.fig1 = load_network((FIXTURES / "fig1.json").read_bytes())
        self.lexicon = load_network((FIXTURES / "lexicon.json").read_bytes())

    def expand_one(self, network, word, mechanism, lang=None, link_types=None):
        request = ExpansionRequest(word, frozenset({mechanism}), lang)
        return expand(network, request, link_types)[mechanism]

    def test_hypernyms(self):
        self.assertEqual(self.expand_one(self.fig1, "florist", Mechanism.HYPERNYMS),
                         {("\\Sell", None), ("\\Person", None), ("\\Flower", None)})

    def test_hyponyms_of_leaf(self):
        self.assertEqual(self.expand_one(self.fig1, "sell", Mechanism.HYPONYMS), frozenset())

    def test_translation(self):
        self.assertEqual(self.expand_one(self.lexicon, "florist", Mechanism.TRANSLATION, "fr"),
                         {("fleuriste", "fr")})
        self.assertEqual(self.expand_one(self.lexicon, "vendre", Mechanism.TRANSLATION, "en"),
                         {("sell", "en")})

    def test_synonyms_stay_in_language(self):
        self.assertEqual(self.expand_one(self.lexicon, "company", Mechanism.SYNONYMS), {("firm", "en")})
        self.assertEqual(self.expand_one(self.lexicon, "buy", Mechanism.SYNONYMS), {("purchase", "en")})

    def test_lexical_links(self):
        self.assertEqual(self.expand_one(self.lexicon, "co", Mechanism.ALIAS), {("company", "en")})
        self.assertEqual(self.expand_one(self.lexicon, "company", Mechanism.ALIAS), {("co", "en")})
        self.assertEqual(self.expand_one(self.lexicon, "flower", Mechanism.INFLECTED), {("flowers", "en")})
        self.assertEqual(self.expand_one(self.lexicon, "flower", Mechanism.DERIVED), {("floral", "en")})
        self.assertEqual(self.expand_one(self.lexicon, "Paris", Mechanism.GEOGRAPHIC), {("France", "en")})

    def test_lexical_links_are_not_hypernyms(self):
        self.assertEqual(self.expand_one(self.lexicon, "flowers", Mechanism.HYPERNYMS), frozenset())
        self.assertEqual(self.expand_one(self.lexicon, "flower", Mechanism.HYPERNYMS), {("\\Flower", None)})

    def test_every_sense(self):
        self.assertEqual(self.expand_one(self.lexicon, "bank", Mechanism.HYPERNYMS),
                         {("\\Finance", None), ("\\River", None)})

    def test_missing_link_type(self):
        self.assertEqual(self.expand_one(self.fig1, "florist", Mechanism.ALIAS), frozenset())
        self.assertEqual(self.expand_one(self.fig1, "florist", Mechanism.TRANSLATION, "fr"), frozenset())

    def test_link_type_override(self):
        self.assertEqual(self.expand_one(self.lexicon, "flower", Mechanism.ALIAS, link_types={"alias": "inflected"}),
                         {("flowers", "en")})
        with self.assertRaises(InputError):
            resolve_link_types({"synonyms": "sense"})

    def test_several_mechanisms(self):
        request = ExpansionRequest("flower", parse_mechanisms("inflected,derived,hypernyms"))
        result = expand(self.lexicon, request)
        self.assertEqual(format_expansion(result), [
            "derived\tfloral\ten",
            "hypernyms\t\\Flower\t-",
            "inflected\tflowers\ten",
        ])

    def test_errors(self):
        with self.assertRaises(UnresolvableError):
            self.expand_one(self.fig1, "xylophone", Mechanism.SYNONYMS)
        with self.assertRaises(InputError):
            ExpansionRequest("florist", frozenset({Mechanism.TRANSLATION}))
        with self.assertRaises(InputError):
            ExpansionRequest("florist", frozenset())
        with self.assertRaises(InputError):
            parse_mechanisms("hypernyms,antonyms")

if __name__ == '__main__':
    unittest.main()
