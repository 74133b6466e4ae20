# Read tests/knowledge.md in this directory for how to run tests.
import math
import os
import sys
import unittest
from pathlib import Path

from hypothesis import given, settings, strategies as st

# Ensure the src package is importable when tests are run directly
ROOT_PATH = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT_PATH))

from config import HConfig, LogConfig
from src.core import Core
from src.errors import CapacityError, DomainError, ResourceError
from src.h_large import ell, expand, h, locate_k, log10_magnitude
from src.models import IDENTITY, UNIT, FactoredH
from src.primes import next_prime

LogConfig.ENABLED = False

LONG_TESTS = os.environ.get("HPRIMES_LONG_TESTS", "0") == "1"


class LocateKTests(unittest.TestCase):
    def test_small_examples(self):
        location = locate_k(10)
        self.assertEqual((location.p_k, location.sigma_k, location.p_next), (5, 10, 7))
        self.assertEqual(location.k, 3)
        location = locate_k(100)
        self.assertEqual((location.p_k, location.sigma_k, location.p_next), (23, 100, 29))
        self.assertEqual(location.k, 9)
        location = locate_k(2)
        self.assertEqual((location.p_k, location.sigma_k, location.p_next, location.k), (2, 2, 3, 1))

    def test_flagship(self):
        location = locate_k(10**12)
        self.assertEqual(location.p_k, 5477081)
        self.assertEqual(location.p_next, 5477083)
        self.assertEqual(location.n_prime, 4935150)

    @settings(max_examples=30, derandomize=True, deadline=None)
    @given(st.integers(2, 10**9))
    def test_analytic_route_matches_sieve_route(self, n):
        self.assertEqual(locate_k(n, direct_threshold=0), locate_k(n, direct_threshold=n + 1))

    def test_bracket(self):
        for n in (11, 99, 100, 101, 10**5 + 3, 2 * 10**6):
            location = locate_k(n)
            self.assertLessEqual(location.sigma_k, n)
            self.assertLess(n, location.sigma_k + location.p_next)
            self.assertEqual(next_prime(location.p_k + 1), location.p_next)

    def test_errors(self):
        with self.assertRaises(DomainError):
            locate_k(1)
        with self.assertRaises(CapacityError):
            locate_k(HConfig.MAX_N + 1)


class SmallHTests(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(h(17), FactoredH(n=17, base_prime=7, sigma_base=17, base_index=4))
        self.assertEqual(expand(h(17)), 210)
        value = h(16)
        self.assertEqual((value.base_prime, value.denominator, value.ell), (7, (2,), 15))
        self.assertEqual(expand(value), 105)
        self.assertEqual(expand(h(50)), 51870)
        for n in (0, 1):
            self.assertEqual(h(n).base_prime, 1)
            self.assertEqual(expand(h(n)), 1)

    def test_errors(self):
        with self.assertRaises(DomainError):
            h(-1)
        with self.assertRaises(CapacityError):
            h(HConfig.MAX_N + 1)


class PipelineTests(unittest.TestCase):
    def assert_pipeline_matches_table(self, ns):
        for n in ns:
            self.assertEqual(h(n, small_n_threshold=1), h(n), n)

    def test_pipeline_matches_table(self):
        # every n up to 300, then a stride through the rest of the table
        self.assert_pipeline_matches_table(range(10, 301))
        self.assert_pipeline_matches_table(range(301, HConfig.SMALL_N_THRESHOLD + 1, 37))

    def test_parity_values(self):
        # sigma_{k+1} - 1 and sigma_{k+1} - 2 go through the parity route
        for n in (16, 15, 27, 26, 40, 39):
            value = h(n, small_n_threshold=1)
            self.assertEqual(value.route, "parity", n)
            self.assertEqual(value.denominator, (2,))
            self.assertEqual(value, h(n))

    @unittest.skipUnless(LONG_TESTS, "set HPRIMES_LONG_TESTS=1")
    def test_pipeline_matches_whole_table(self):
        self.assert_pipeline_matches_table(range(10, HConfig.SMALL_N_THRESHOLD + 1))


class LargeHTests(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.core = Core()

    def test_flagship(self):
        value = h(10**12)
        self.assertEqual(value.route, "fast")
        self.assertEqual(value.base_prime, 5477081)
        self.assertEqual(value.numerator, (5477089, 5477093))
        self.assertEqual(value.denominator, (541951, 5477081))
        self.assertEqual(ell(value), 10**12)
        self.assertEqual((value.delta, value.inner_evaluations), (18, 1))
        self.assertIsNone(log10_magnitude(FactoredH(n=0, base_prime=HConfig.LOG10_MAX_BASE + 1, sigma_base=0)))

    @unittest.skipUnless(LONG_TESTS, "set HPRIMES_LONG_TESTS=1")
    def test_ten_to_the_35(self):
        value = h(10**35)
        self.assertEqual(value.base_prime, 2898434150644708999)
        self.assertEqual(value.numerator, (2898434150644709023,))
        self.assertEqual(value.denominator, (1012352338532863519,))
        self.assertEqual((value.delta, value.inner_evaluations), (134, 5))
        self.assertLessEqual(value.ell, 10**35)

    @settings(max_examples=1000, derandomize=True, deadline=None)
    @given(st.integers(10, 10**9))
    def test_invariants(self, n):
        core = self.core
        value, following = core.h(n), core.h(n + 1)
        self.assertLessEqual(value.ell, n)
        self.assertLessEqual(expand(value, budget=10**6), expand(following, budget=10**6))
        if value.numerator:
            location = core.locate_k(n)
            p_after = next_prime(location.p_next + 1)
            self.assertLess(value.numerator[-1], location.p_next + p_after)


class ExpansionTests(unittest.TestCase):
    def test_budget(self):
        with self.assertRaises(ResourceError):
            expand(h(50), budget=5)
        with self.assertRaises(ResourceError):
            expand(FactoredH(n=10**12, base_prime=5477081, sigma_base=10**12 - 4935150))

    def test_log10(self):
        self.assertAlmostEqual(log10_magnitude(h(17)), math.log10(210), places=9)
        self.assertAlmostEqual(log10_magnitude(h(50)), math.log10(51870), places=9)
        self.assertAlmostEqual(log10_magnitude(h(16)), math.log10(105), places=9)


class CoreTests(unittest.TestCase):
    def test_h_many_keeps_order(self):
        ns = [5000, 17, 6000, 16, 10**5, 50]
        core = Core(threads=2)
        values = core.h_many(ns)
        self.assertEqual([v.n for v in values], ns)
        self.assertEqual(values, [h(n) for n in ns])

    def test_pif_cache(self):
        core = Core()
        self.assertEqual(core.pif(2657, IDENTITY), 464653)
        self.assertEqual(core.pif(2657, UNIT), 384)
        self.assertEqual(core._pif[(2657, "identity")], 464653)


if __name__ == '__main__':
    unittest.main()
