"""Tests for severi_genus.genus_invariants."""

from __future__ import annotations

import sys
import threading
import unittest
from fractions import Fraction

from severi_genus import genus_invariants as gi
from severi_genus.errors import DegreeOutOfRangeError, NonIntegralError
from severi_genus.gw_counts import n_table
from severi_genus.models import GWTable

# d: (g, ĝ, g̃, M) as published; M is None for d < 3.
PUBLISHED = {
    1: (0, 0, 0, None),
    2: (0, 0, 0, None),
    3: (55, 10, 3, 1),
    4: (5447, 1685, 725, 96),
    5: (1059729, 402261, 166545, 18132),
    6: (393308785, 168879025, 64776625, 6506400),
    7: (254586817377, 119342269809, 42214315809, 4059366000),
    8: (265975021514145, 133411753757505, 43616611944513, 4081597355136),
}


class GenusTestCase(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.table = n_table(30)


class ArithmeticGenusTests(GenusTestCase):
    def test_examples(self):
        self.assertEqual(gi.arithmetic_genus_g(1, self.table), 0)
        self.assertEqual(gi.arithmetic_genus_g(2, self.table), 0)
        self.assertEqual(gi.arithmetic_genus_g(3, self.table), 55)
        self.assertEqual(gi.arithmetic_genus_g(4, self.table), 5447)

    def test_published_table(self):
        for d, (g, _, _, _) in PUBLISHED.items():
            with self.subTest(d=d):
                self.assertEqual(gi.arithmetic_genus_g(d, self.table), g)

    def test_degree_zero_rejected(self):
        with self.assertRaises(DegreeOutOfRangeError):
            gi.arithmetic_genus_g(0, self.table)


class GHatTests(GenusTestCase):
    def test_examples(self):
        self.assertEqual(gi.arithmetic_genus_g_hat(3, self.table), 10)
        self.assertEqual(gi.arithmetic_genus_g_hat(4, self.table), 1685)
        self.assertEqual(gi.arithmetic_genus_g_hat(8, self.table), 133411753757505)

    def test_low_degrees_rejected(self):
        for d in (1, 2):
            with self.assertRaises(DegreeOutOfRangeError):
                gi.arithmetic_genus_g_hat(d, self.table)


class GeometricGenusTests(GenusTestCase):
    def test_examples(self):
        self.assertEqual(gi.geometric_genus(2, self.table), 0)
        self.assertEqual(gi.geometric_genus(3, self.table), 3)
        self.assertEqual(gi.geometric_genus(5, self.table), 166545)

    def test_base_cases_come_from_the_formula(self):
        self.assertEqual(gi.geometric_genus(1, self.table), 0)
        self.assertEqual(gi.geometric_genus(2, self.table), 0)

    def test_published_table(self):
        for d, (_, _, g_tilde, _) in PUBLISHED.items():
            with self.subTest(d=d):
                self.assertEqual(gi.geometric_genus(d, self.table), g_tilde)


class SingularityContributionTests(GenusTestCase):
    def test_cusp_count(self):
        self.assertEqual(gi.cusp_count(1, self.table), 0)
        self.assertEqual(gi.cusp_count(3, self.table), 24)
        self.assertEqual(gi.cusp_count(4, self.table), 2304)

    def test_lemma5_contribution(self):
        self.assertEqual(gi.lemma5_node_contribution(1, self.table), 0)
        self.assertEqual(gi.lemma5_node_contribution(3, self.table), 21)
        self.assertEqual(gi.lemma5_node_contribution(4, self.table), 1458)

    def test_genus_decomposition(self):
        for d in range(3, 9):
            with self.subTest(d=d):
                self.assertEqual(
                    gi.arithmetic_genus_g(d, self.table),
                    gi.arithmetic_genus_g_hat(d, self.table)
                    + gi.cusp_count(d, self.table)
                    + gi.lemma5_node_contribution(d, self.table),
                )


class MTests(GenusTestCase):
    def test_via_relation(self):
        self.assertEqual(gi.m_via_relation(3, self.table), 1)
        self.assertEqual(gi.m_via_relation(4, self.table), 96)
        self.assertEqual(gi.m_via_relation(8, self.table), 4081597355136)

    def test_node_relation(self):
        for d in range(3, 9):
            with self.subTest(d=d):
                diff = gi.arithmetic_genus_g_hat(d, self.table) - gi.geometric_genus(d, self.table)
                self.assertEqual(diff, (3 * d - 2) * gi.m_via_relation(d, self.table))
                self.assertEqual(gi.hat_node_count(d, self.table), diff)
        # 1685 - 725 = 10 · 96
        self.assertEqual(gi.hat_node_count(4, self.table), 960)

    def test_closed_form_is_twice_the_table_at_3_and_4(self):
        self.assertEqual(gi.m_closed_form(3, self.table), Fraction(2))
        self.assertEqual(gi.m_closed_form(4, self.table), Fraction(192))
        for d in (3, 4):
            ratio = gi.m_closed_form(d, self.table) / gi.m_via_relation(d, self.table)
            self.assertEqual(ratio, 2)

    def test_low_degrees_rejected(self):
        with self.assertRaises(DegreeOutOfRangeError):
            gi.m_via_relation(2, self.table)
        with self.assertRaises(DegreeOutOfRangeError):
            gi.m_closed_form(2, self.table)


class IntegralityTests(GenusTestCase):
    def test_sweep_to_degree_30(self):
        for d in range(1, 31):
            with self.subTest(d=d):
                self.assertGreaterEqual(gi.arithmetic_genus_g(d, self.table), 0)
                self.assertGreaterEqual(gi.geometric_genus(d, self.table), 0)
                self.assertGreaterEqual(gi.cusp_count(d, self.table), 0)
                self.assertGreaterEqual(gi.lemma5_node_contribution(d, self.table), 0)
                if d >= 3:
                    self.assertGreaterEqual(gi.arithmetic_genus_g_hat(d, self.table), 0)

    def test_odd_or_fractional_two_g_minus_two_rejected(self):
        with self.assertRaises(NonIntegralError):
            gi._genus_from(Fraction(7, 2), "g")
        with self.assertRaises(NonIntegralError):
            gi._genus_from(Fraction(7), "g")
        self.assertEqual(gi._genus_from(Fraction(108), "g"), 55)


class CubicTests(GenusTestCase):
    def test_discriminant_cross_check(self):
        # C_3 is a degree-12 plane curve: genus 11·10/2.
        self.assertEqual(gi.plane_curve_genus(12), 55)
        report = gi.genus_report(3, self.table)
        nodes = report.lemma5_nodes + report.hat_nodes
        self.assertEqual((report.cusps, nodes), (24, 28))
        self.assertEqual(report.g - report.cusps - nodes, report.g_tilde)
        self.assertEqual(report.g_tilde, 3)


class GenusReportTests(GenusTestCase):
    def test_degree_three(self):
        report = gi.genus_report(3, self.table)
        self.assertEqual((report.N, report.g, report.g_hat, report.g_tilde, report.M_relation),
                         (12, 55, 10, 3, 1))
        self.assertEqual(report.M_closed_form, 2)
        self.assertEqual(report.closed_form_ratio, 2)
        self.assertEqual(report.hat_nodes, 7)
        self.assertTrue(report.all_identities_hold)
        self.assertIn("cubic_cross_check", report.identity_flags)

    def test_degree_one(self):
        report = gi.genus_report(1, self.table)
        self.assertEqual((report.N, report.g, report.g_tilde), (1, 0, 0))
        self.assertIsNone(report.M_relation)
        self.assertIsNone(report.M_closed_form)
        self.assertIsNone(report.closed_form_ratio)
        self.assertTrue(report.all_identities_hold)

    def test_degree_six(self):
        report = gi.genus_report(6, self.table)
        self.assertEqual((report.g, report.g_hat, report.g_tilde, report.M_relation),
                         (393308785, 168879025, 64776625, 6506400))

    def test_published_rows(self):
        for d, expected in PUBLISHED.items():
            with self.subTest(d=d):
                report = gi.genus_report(d, self.table)
                self.assertEqual((report.g, report.g_hat, report.g_tilde, report.M_relation), expected)
                self.assertTrue(report.all_identities_hold)


class ReadOnlyTableTests(unittest.TestCase):
    def test_unfilled_table_is_refused_not_grown(self):
        table = n_table(5)
        with self.assertRaises(KeyError):
            gi.geometric_genus(6, table)
        with self.assertRaises(KeyError):
            gi.genus_report(7, GWTable())
        self.assertEqual(table.max_degree, 5)

    def test_concurrent_degrees_share_one_table(self):
        # Force frequent thread switches so unsynchronized writes would interleave.
        old_interval = sys.getswitchinterval()
        sys.setswitchinterval(1e-6)
        self.addCleanup(sys.setswitchinterval, old_interval)

        table = n_table(40)
        before = table.as_list()
        degrees = (38, 39, 40)
        expected = {d: gi.geometric_genus(d, n_table(40)) for d in degrees}
        results: dict[int, int] = {}

        def work(d: int) -> None:
            results[d] = gi.geometric_genus(d, table)

        for _ in range(10):
            threads = [threading.Thread(target=work, args=(d,)) for d in degrees]
            for t in threads:
                t.start()
            for t in threads:
                t.join()
            self.assertEqual(results, expected)
            self.assertEqual(table.as_list(), before)


if __name__ == "__main__":
    unittest.main()
