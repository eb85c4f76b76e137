import math
import os
import sys
import tempfile
import unittest
from pathlib import Path

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../src')))

from semnet.apps.classification import classify, classify_many
from semnet.apps.profiles import Profile, load_profiles, profile_from_words
from semnet.network import LinkWeightConfig, load_network, load_weights
from semnet.textproc import StopList, load_stoplist
from util.errors import InputError, ParseError, UnresolvableError, ValidationError
from oracle import Oracle

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
UNIT = LinkWeightConfig.unit()

class TestClassify(unittest.TestCase):
    def setUp(self):
        self.fig1 = load_network((FIXTURES / "fig1.json").read_bytes())
        self.lexicon = load_network((FIXTURES / "lexicon.json").read_bytes())
        self.profiles = load_profiles(str(FIXTURES / "profiles.json"))

    def test_single_profile(self):
        ranking = classify(self.fig1, UNIT, "florist", [Profile("only", ("sell",))], StopList())
        self.assertEqual([pid for pid, _ in ranking], ["only"])

    def test_identical_document_wins(self):
        ranking = classify(self.lexicon, UNIT, "They buy and purchase a company.", self.profiles,
                           load_stoplist(str(FIXTURES / "stop_en.txt")))
        self.assertEqual(ranking[0], ("acquisitions", 0.0))

    def test_matches_oracle(self):
        oracle = Oracle([n.id for n in self.fig1.nodes],
                        [(e.child, e.parent, e.link_type) for e in self.fig1.edges], {}, 1.0)
        profiles = [Profile("p2", ("sell",)), Profile("p1", ("seller",))]
        ranking = classify(self.fig1, UNIT, "florist", profiles, StopList())

        expected = sorted([
            ("p1", oracle.proximity(frozenset({"florist"}), frozenset({"seller"}))),
            ("p2", oracle.proximity(frozenset({"florist"}), frozenset({"sell"}))),
        ], key=lambda item: (item[1], item[0]))
        self.assertEqual(ranking, expected)

    def test_unresolvable_profile_last(self):
        profiles = [Profile("zoo", ("zebra",)), Profile("trade", ("sell",))]
        ranking = classify(self.fig1, UNIT, "florist", profiles, StopList())
        self.assertEqual(ranking[-1], ("zoo", math.inf))

    def test_errors(self):
        with self.assertRaises(UnresolvableError):
            classify(self.fig1, UNIT, "nothing known here", self.profiles, StopList())
        with self.assertRaises(InputError):
            classify(self.fig1, UNIT, "florist", [], StopList())

    def test_weighted_lexicon(self):
        config = load_weights((FIXTURES / "weights_lexical.json").read_bytes())
        ranking = classify(self.lexicon, config, "The florist sells flowers.", self.profiles, StopList())
        self.assertEqual(ranking[0][0], "flower-trade")

    def test_order_invariant_under_scaling(self):
        document = "The florist sells flowers in Paris."
        base = classify(self.lexicon, UNIT, document, self.profiles, StopList())
        scaled = classify(self.lexicon, UNIT.scaled(3), document, self.profiles, StopList())
        self.assertEqual([pid for pid, _ in base], [pid for pid, _ in scaled])

    def test_many_documents(self):
        documents = ["florist", "seller", "sell"]
        profiles = [Profile("p1", ("seller",)), Profile("p2", ("sell",))]
        rankings = classify_many(self.fig1, UNIT, documents, profiles, StopList(), workers=4)
        self.assertEqual(rankings, [classify(self.fig1, UNIT, d, profiles, StopList()) for d in documents])
        self.assertEqual(rankings[1][0], ("p1", 0.0))
        self.assertEqual(rankings[2][0], ("p2", 0.0))

class TestProfiles(unittest.TestCase):
    def setUp(self):
        self.test_dir = tempfile.TemporaryDirectory()
        self.root = Path(self.test_dir.name)

    def tearDown(self):
        self.test_dir.cleanup()

    def test_json(self):
        profiles = load_profiles(str(FIXTURES / "profiles.json"))
        self.assertEqual([p.id for p in profiles], ["acquisitions", "flower-trade", "banking"])
        self.assertEqual(profiles[0].definition, ("buy", "purchase", "company"))

    def test_text(self):
        path = self.root / "profiles.txt"
        path.write_text("# mailboxes\n[real estate] Apartment, house\n[trade] sell\n", encoding="utf-8")
        profiles = load_profiles(str(path))
        self.assertEqual(profiles, [Profile("real estate", ("apartment", "house")), Profile("trade", ("sell",))])

    def test_duplicate_id(self):
        path = self.root / "profiles.txt"
        path.write_text("[a] sell\n[a] buy\n", encoding="utf-8")
        with self.assertRaises(ValidationError):
            load_profiles(str(path))

    def test_malformed(self):
        path = self.root / "profiles.json"
        for content in ("{", '{"id": "a"}', '[{"id": "a", "definition": "sell"}]'):
            with self.subTest(content=content):
                path.write_text(content, encoding="utf-8")
                with self.assertRaises(ParseError):
                    load_profiles(str(path))

    def test_empty_definition(self):
        with self.assertRaises(ValidationError):
            profile_from_words(" , ")

if __name__ == '__main__':
    unittest.main()
