import os
import sys
import unittest
from pathlib import Path

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../src')))

from semnet.apps.inspection import format_inspection, inspect_pair
from semnet.network import LinkWeightConfig, load_network

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

class TestInspection(unittest.TestCase):
    def setUp(self):
        self.network = load_network((FIXTURES / "fig1.json").read_bytes())

    def test_report(self):
        report = inspect_pair(self.network, "seller", "florist", LinkWeightConfig.unit())
        self.assertEqual(report.anca_ab, frozenset())
        self.assertEqual(report.anca_ba, {"\\Universe"})
        self.assertEqual(report.proximity_ba.score, 6)
        self.assertEqual(len(report.c_a), 4)

    def test_format(self):
        report = inspect_pair(self.network, "seller", "florist", LinkWeightConfig.unit())
        self.assertEqual(format_inspection(self.network, report), [
            "h({seller})\t{\\Person, \\Sell, \\Universe}",
            "h({florist})\t{\\Flower, \\Person, \\Sell, \\Universe}",
            "c({seller})\t{(\\Person, \\Universe), (\\Sell, \\Universe), (seller, \\Person), (seller, \\Sell)}",
            "c({florist})\t{(\\Flower, \\Universe), (\\Person, \\Universe), (\\Sell, \\Universe), "
            "(florist, \\Flower), (florist, \\Person), (florist, \\Sell)}",
            "NCA({seller}, {florist})\t{\\Person, \\Sell}",
            "ANCA({seller}, {florist})\t{}",
            "ANCA({florist}, {seller})\t{\\Universe}",
            "activation({seller}, {florist})\t2.0",
            "activation({florist}, {seller})\t2.0",
            "proximity({seller}, {florist})\t2.0",
            "proximity({florist}, {seller})\t6.0",
        ])

    def test_fallback_marked(self):
        report = inspect_pair(self.network, "\\Sell", "\\Flower", LinkWeightConfig.unit())
        lines = format_inspection(self.network, report)
        self.assertEqual(lines[4], "NCA({\\Sell}, {\\Flower})\t{\\Universe} (root fallback)")

if __name__ == '__main__':
    unittest.main()
