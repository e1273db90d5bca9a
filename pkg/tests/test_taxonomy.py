"""
Unit tests for the error taxonomy and error planning
"""
import unittest
import sys
import os

# Add project root to path
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.append(project_root)


class TestTaxonomy(unittest.TestCase):
    """Test the error type table"""

    def setUp(self):
        from src.taxonomy.error_taxonomy import Method, default_taxonomy, taxonomy
        self.Method = Method
        self.entries = taxonomy()
        self.taxonomy = default_taxonomy()

    def test_twenty_error_types(self):
        self.assertEqual(len(self.entries), 20)
        self.assertEqual(len(set(e.code for e in self.entries)), 20)

    def test_table_values(self):
        self.assertAlmostEqual(self.taxonomy.get("SPELL").target_share, 0.2555)
        self.assertEqual(self.taxonomy.get("VERB:SVA").method, self.Method.TWO_SHOT_LLM)
        self.assertEqual(self.taxonomy.get("ADJ:FORM").method, self.Method.ZERO_SHOT_LLM)
        self.assertEqual(self.taxonomy.get("PUNCT").method, self.Method.CONFUSION_LIST)
        self.assertEqual(self.taxonomy.get("WO").method, self.Method.NOISE_INJECTION)

    def test_shares_sum_to_one(self):
        self.assertAlmostEqual(sum(e.target_share for e in self.entries), 1.0, delta=1e-6)

    def test_method_split(self):
        self.assertEqual(len(self.taxonomy.by_method(self.Method.TWO_SHOT_LLM)), 10)
        self.assertEqual(len(self.taxonomy.by_method(self.Method.ZERO_SHOT_LLM)), 2)
        self.assertEqual(len(self.taxonomy.by_method(self.Method.CONFUSION_LIST)), 5)
        self.assertEqual(len(self.taxonomy.by_method(self.Method.NOISE_INJECTION)), 3)

    def test_unknown_code(self):
        from src.utils.errors import ConfigurationError
        with self.assertRaises(ConfigurationError):
            self.taxonomy.get("NOPE")

    def test_overrides(self):
        from src.utils.errors import ConfigurationError
        moved = self.taxonomy.with_overrides(methods={"ADJ": "noise_injection"})
        self.assertEqual(moved.get("ADJ").method, self.Method.NOISE_INJECTION)
        self.assertEqual(self.taxonomy.get("ADJ").method, self.Method.TWO_SHOT_LLM)
        with self.assertRaises(ConfigurationError):
            self.taxonomy.with_overrides(shares={"SPELL": 0.5})
        with self.assertRaises(ConfigurationError):
            self.taxonomy.with_overrides(methods={"SPELL": "confusion_list"})
        with self.assertRaises(ConfigurationError):
            self.taxonomy.with_overrides(methods={"ADJ": "magic"})


class TestPlanErrors(unittest.TestCase):
    """Test per-sentence error planning"""

    def setUp(self):
        from src.taxonomy.error_taxonomy import default_taxonomy, plan_errors
        self.plan_errors = plan_errors
        self.shares = default_taxonomy().shares()

    def test_share_adherence(self):
        plan = self.plan_errors(10000, self.shares, seed=42)
        self.assertEqual(len(plan), 10000)
        counts = plan.counts()
        self.assertLessEqual(abs(counts["SPELL"] - 2555), 150)
        for code, share in self.shares.items():
            self.assertLessEqual(abs(counts.get(code, 0) / 10000 - share), 0.015, code)

    def test_degenerate_distribution(self):
        plan = self.plan_errors(1, {"SPELL": 1.0}, seed=123)
        self.assertEqual(plan.codes(), ["SPELL"])

    def test_deterministic(self):
        first = self.plan_errors(5, self.shares, seed=7)
        second = self.plan_errors(5, self.shares, seed=7)
        self.assertEqual(first.codes(), second.codes())

    def test_seed_changes_order(self):
        first = self.plan_errors(200, self.shares, seed=1)
        second = self.plan_errors(200, self.shares, seed=2)
        self.assertEqual(first.counts(), second.counts())
        self.assertNotEqual(first.codes(), second.codes())

    def test_invalid_input(self):
        from src.utils.errors import ConfigurationError, UsageError
        with self.assertRaises(UsageError):
            self.plan_errors(0, self.shares, seed=1)
        with self.assertRaises(ConfigurationError):
            self.plan_errors(10, {"SPELL": 0.5}, seed=1)
        with self.assertRaises(ConfigurationError):
            self.plan_errors(10, {"BOGUS": 1.0}, seed=1)


if __name__ == "__main__":
    unittest.main()
