"""Tests for severi_genus.verification."""

from __future__ import annotations

import unittest

from severi_genus import verification
from severi_genus.gw_counts import n_table
from severi_genus.models import GWTable

EXPECTED_CHECKS = [
    "counts_table",
    "genus_table",
    "recursion_order_invariance",
    "recomputation_determinism",
    "genus_decomposition",
    "node_relation",
    "integrality_sweep",
    "geometric_genus_base_cases",
    "cubic_cross_check",
    "prop3_reduces_to_prop2",
    "coefficient_symmetry",
    "geometric_anchors",
    "coefficient_denominators",
    "no_stability_zero_classes",
]


class RunChecksTests(unittest.TestCase):
    def test_all_pass_at_degree_eight(self):
        verdicts = verification.run_checks(8)
        self.assertEqual([v.name for v in verdicts], EXPECTED_CHECKS)
        failed = [(v.name, v.detail) for v in verdicts if not v.passed]
        self.assertEqual(failed, [])

    def test_all_pass_at_degree_three(self):
        grid = verification.VerificationGrid(n_max=3, r_max=3, d_max=3)
        self.assertTrue(all(v.passed for v in verification.run_checks(3, grid)))


class SingleCheckTests(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.table = n_table(30)

    def test_decomposition_anchor(self):
        verdict = verification.check_genus_decomposition(4, self.table)
        self.assertTrue(verdict.passed, verdict.detail)

    def test_cubic(self):
        self.assertTrue(verification.check_cubic_cross_check(self.table).passed)

    def test_integrality_to_thirty(self):
        self.assertTrue(verification.check_integrality(30, self.table).passed)

    def test_corrupted_table_fails(self):
        bad = GWTable(values=self.table.as_list()[:8])
        bad.values[4] += 1
        self.assertFalse(verification.check_counts_table(8, bad).passed)

    def test_low_degree_checks_are_skipped(self):
        verdicts = [
            verification.check_genus_decomposition(2, self.table),
            verification.check_node_relation(1, self.table),
            verification.check_recursion_order(1, self.table),
        ]
        for verdict in verdicts:
            with self.subTest(name=verdict.name):
                self.assertTrue(verdict.passed)
                self.assertTrue(verdict.detail.startswith("skipped"), verdict.detail)
                self.assertNotIn("3..2", verdict.detail)

    def test_grid_signatures(self):
        grid = verification.VerificationGrid(n_max=1, r_max=3, d_max=2)
        self.assertEqual(len(list(grid.signatures())), 2 * 2 * 2)


if __name__ == "__main__":
    unittest.main()
