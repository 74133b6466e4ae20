# Read tests/knowledge.md in this directory for how to run tests.
import sys
import unittest
from fractions import Fraction
from math import prod
from pathlib import Path

# Ensure the src package is importable when tests are run directly
ROOT_PATH = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT_PATH))

from config import HConfig, LogConfig
from src.errors import DomainError, ResourceError
from src.h_table import (
    brute_force_h,
    compute_table,
    first_primes,
    h_small,
    hj_bounds,
    iter_hj_bounds,
    prime_sums_through,
)
from src.primes import small_primes

LogConfig.ENABLED = False

# h_1(n), h_2(n), ... for 2 <= n <= 50
GOLDEN = """
2:2
3:3
4:3
5:5,6
6:5,6
7:7,10
8:7,15
9:7,15
10:7,21,30
11:11,21,30
12:11,35,42
13:13,35,42
14:13,35,70
15:13,35,105
16:13,55,105
17:17,55,105,210
18:17,77,110,210
19:19,77,165,210
20:19,91,165,210
21:19,91,231,330
22:19,91,231,330
23:23,91,385,462
24:23,143,385,462
25:23,143,455,770
26:23,143,455,1155
27:23,143,455,1155
28:23,187,455,1365,2310
29:29,187,715,1365,2310
30:29,221,715,1365,2730
31:31,221,1001,1430,2730
32:31,247,1001,2145,2730
33:31,247,1001,2145,2730
34:31,253,1001,3003,4290
35:31,253,1309,3003,4290
36:31,323,1309,5005,6006
37:37,323,1547,5005,6006
38:37,323,1547,5005,10010
39:37,323,1729,5005,15015
40:37,391,1729,6545,15015
41:41,391,2431,6545,15015,30030
42:41,437,2431,7735,15015,30030
43:43,437,2717,7735,19635,30030
44:43,437,2717,8645,19635,30030
45:43,437,2717,8645,23205,39270
46:43,493,2717,12155,23205,39270
47:47,493,3553,12155,25935,46410
48:47,551,3553,17017,25935,46410
49:47,551,4199,17017,36465,51870
50:47,589,4199,19019,36465,51870
"""


def golden_rows():
    for line in GOLDEN.split():
        n, values = line.split(":")
        yield int(n), [int(v) for v in values.split(",")]


class ComputeTableTests(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.table = compute_table(70)

    def test_golden_columns(self):
        table = compute_table(50)
        for n, expected in golden_rows():
            self.assertEqual(table.column(n), expected, n)

    def test_restricted_alphabet(self):
        alphabet = [p for p in small_primes(24).tolist() if p not in (5, 7)]
        table = compute_table(24, alphabet)
        self.assertFalse(table.full)
        self.assertEqual(table.value(2, 24), 143)
        self.assertEqual(table.value(3, 24), 114)
        with self.assertRaises(DomainError):
            h_small(24, table)

    def test_h_small(self):
        self.assertEqual(h_small(0, self.table), 1)
        self.assertEqual(h_small(1, self.table), 1)
        self.assertEqual(h_small(16, self.table), 105)
        self.assertEqual(h_small(17, self.table), 210)
        self.assertEqual(h_small(50, self.table), 51870)
        with self.assertRaises(DomainError):
            h_small(71, self.table)

    def test_matches_exhaustive_search(self):
        for n in range(2, 71):
            self.assertEqual(brute_force_h(n), (h_small(n, self.table), self.table.k_of(n)), n)

    def test_monotone_in_n(self):
        for j in range(1, self.table.jmax + 1):
            row = [self.table.value(j, n) for n in range(71)]
            defined = [v for v in row if v]
            self.assertEqual(defined, sorted(defined), j)

    def test_strictly_increasing_in_j_up_to_k(self):
        for n in range(2, 71):
            k = self.table.k_of(n)
            values = [self.table.value(j, n) for j in range(1, k + 1)]
            self.assertTrue(all(a < b for a, b in zip(values, values[1:])), n)

    def test_primorials_at_prime_sums(self):
        sigma = self.table.sigma
        for j in range(1, len(sigma) - 1):
            if sigma[j] <= 70:
                self.assertEqual(h_small(sigma[j], self.table), prod(first_primes(j)))

    def test_values_outside_the_table(self):
        self.assertEqual(self.table.value(self.table.jmax + 1, 50), 0)
        self.assertEqual(self.table.value(2, 4), 0)
        self.assertEqual(self.table.value(0, 9), 1)
        with self.assertRaises(DomainError):
            self.table.value(1, 71)

    def test_format_with_separator(self):
        lines = compute_table(10).format_table(separator="\t").split("\n")
        self.assertEqual(lines[0], "j=\t1\t2\t3")
        self.assertEqual(lines[1], "2\t2\t\t")
        self.assertEqual(lines[-1], "10\t7\t21\t30")

    def test_aligned_format(self):
        lines = compute_table(10).format_table().split("\n")
        self.assertEqual(lines[1].split(), ["2", "2"])
        self.assertEqual(lines[-1].split(), ["10", "7", "21", "30"])

    def test_errors(self):
        with self.assertRaises(DomainError):
            compute_table(1)
        with self.assertRaises(DomainError):
            compute_table(20, [2, 4, 5])
        with self.assertRaises(DomainError):
            compute_table(20, [3, 2])
        original = HConfig.MAX_TABLE_CELLS
        HConfig.MAX_TABLE_CELLS = 10
        try:
            with self.assertRaises(ResourceError):
                compute_table(50)
        finally:
            HConfig.MAX_TABLE_CELLS = original


class HelperTests(unittest.TestCase):
    def test_prime_sums(self):
        self.assertEqual(prime_sums_through(10), (0, 2, 5, 10, 17))
        self.assertEqual(prime_sums_through(0), (0, 2))
        self.assertEqual(first_primes(5), [2, 3, 5, 7, 11])
        self.assertEqual(len(first_primes(100)), 100)

    def test_brute_force_examples(self):
        self.assertEqual(brute_force_h(0), (1, 0))
        self.assertEqual(brute_force_h(2), (2, 1))
        self.assertEqual(brute_force_h(5), (6, 2))
        self.assertEqual(brute_force_h(10), (30, 3))
        with self.assertRaises(DomainError):
            brute_force_h(HConfig.BRUTE_FORCE_MAX_N + 1)
        with self.assertRaises(DomainError):
            brute_force_h(-1)


class HjBoundsTests(unittest.TestCase):
    def test_inexact_bracket(self):
        bounds = hj_bounds(3, 13)
        self.assertEqual(bounds.r, 0)
        self.assertEqual(bounds.n_prime, 3)
        self.assertEqual(bounds.gap, 4)
        self.assertEqual(bounds.q, 5)
        self.assertEqual(bounds.lower, 42)
        self.assertEqual(bounds.upper, Fraction(210, 4))
        self.assertFalse(bounds.exact)

    def test_exact_bracket(self):
        bounds = hj_bounds(2, 8)
        self.assertEqual(bounds.r, 1)
        self.assertEqual(bounds.gap, 7)
        self.assertEqual(bounds.q, 7)
        self.assertTrue(bounds.exact)
        self.assertEqual(bounds.lower, 15)

    def test_brackets_hold_on_the_table(self):
        table = compute_table(200)
        for j in range(1, 6):
            for n, bounds in iter_hj_bounds(j, 200):
                value = table.value(j, n)
                self.assertLessEqual(bounds.lower, value, (j, n))
                self.assertLessEqual(value, bounds.upper, (j, n))
                if bounds.exact:
                    self.assertEqual(value, bounds.lower, (j, n))

    def test_iteration_matches_pointwise(self):
        for j in (1, 3, 7):
            for n, bounds in iter_hj_bounds(j, 400):
                self.assertEqual(bounds, hj_bounds(j, n), (j, n))

    def test_errors(self):
        with self.assertRaises(DomainError):
            hj_bounds(3, 5)
        with self.assertRaises(DomainError):
            hj_bounds(0, 5)
        with self.assertRaises(DomainError):
            list(iter_hj_bounds(0, 10))


if __name__ == '__main__':
    unittest.main()
