"""Tests for severi_genus.exact_arith."""

from __future__ import annotations

import itertools
import unittest
from fractions import Fraction

from severi_genus.errors import NonIntegralError
from severi_genus.exact_arith import (
    as_rational,
    binomial,
    format_exact,
    rational_add,
    rational_div,
    rational_mul,
    rational_neg,
    to_integer,
)


class BinomialTests(unittest.TestCase):
    def test_small_values(self):
        self.assertEqual(binomial(7, 2), 21)
        self.assertEqual(binomial(10, 5), 252)
        self.assertEqual(binomial(0, 0), 1)

    def test_out_of_range_k_is_zero(self):
        self.assertEqual(binomial(5, -1), 0)
        self.assertEqual(binomial(5, 6), 0)

    def test_negative_n_rejected(self):
        with self.assertRaises(ValueError):
            binomial(-1, 0)

    def test_symmetry_and_row_sums(self):
        for n in range(65):
            row = [binomial(n, k) for k in range(-2, n + 3)]
            self.assertEqual(row, row[::-1])
            self.assertEqual(sum(row), 2 ** n)

    def test_large_values_are_exact(self):
        self.assertEqual(binomial(100, 50), 100891344545564193334812497256)


class RationalTests(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(rational_add(Fraction(1, 3), Fraction(1, 6)), Fraction(1, 2))
        self.assertEqual(rational_mul(Fraction(-2, 3), 3), -2)
        self.assertEqual(rational_div(Fraction(5, 4), Fraction(5, 4)), 1)
        self.assertEqual(rational_neg(Fraction(2, 7)), Fraction(-2, 7))

    def test_division_by_zero(self):
        with self.assertRaises(ZeroDivisionError):
            rational_div(1, Fraction(0))

    def test_results_are_reduced(self):
        x = rational_add(Fraction(1, 4), Fraction(1, 4))
        self.assertEqual((x.numerator, x.denominator), (1, 2))
        y = Fraction(3, -6)
        self.assertEqual((y.numerator, y.denominator), (-1, 2))

    def test_field_axioms_on_small_operands(self):
        values = [Fraction(p, q) for p in range(-3, 4) for q in (1, 2, 3, 5)]
        sample = values[::3]
        for a, b, c in itertools.product(sample, repeat=3):
            self.assertEqual(rational_add(rational_add(a, b), c), rational_add(a, rational_add(b, c)))
            self.assertEqual(rational_mul(rational_mul(a, b), c), rational_mul(a, rational_mul(b, c)))
            self.assertEqual(rational_mul(a, rational_add(b, c)),
                             rational_add(rational_mul(a, b), rational_mul(a, c)))
        for a in values:
            self.assertEqual(rational_add(a, rational_neg(a)), 0)
            if a:
                self.assertEqual(rational_mul(a, rational_div(1, a)), 1)

    def test_floats_refused(self):
        with self.assertRaises(TypeError):
            as_rational(0.5)
        self.assertEqual(as_rational("3/6"), Fraction(1, 2))


class ToIntegerTests(unittest.TestCase):
    def test_integral(self):
        self.assertEqual(to_integer(Fraction(14, 1)), 14)
        self.assertEqual(to_integer(Fraction(0)), 0)
        self.assertIsInstance(to_integer(Fraction(28, 2)), int)

    def test_non_integral(self):
        with self.assertRaises(NonIntegralError):
            to_integer(Fraction(3, 2))
        with self.assertRaises(ArithmeticError):
            to_integer(Fraction(-1, 3))


class FormatTests(unittest.TestCase):
    def test_canonical_strings(self):
        self.assertEqual(format_exact(Fraction(-2, 3)), "-2/3")
        self.assertEqual(format_exact(Fraction(4, 2)), "2")
        self.assertEqual(format_exact(13525751027392), "13525751027392")


if __name__ == "__main__":
    unittest.main()
