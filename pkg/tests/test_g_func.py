# Read tests/knowledge.md in this directory for how to run tests.
import sys
import unittest
from fractions import Fraction
from pathlib import Path

from hypothesis import given, settings, strategies as st

# Ensure the src package is importable when tests are run directly
ROOT_PATH = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT_PATH))

from config import HConfig, LogConfig
from src.errors import DeltaSearchError, DomainError, ResourceError
from src.g_func import g, g_bounds, g_combinatorial, g_fast
from src.models import PrimeFraction
from src.primes import next_prime, prev_prime

LogConfig.ENABLED = False


class CombinatorialTests(unittest.TestCase):
    def test_small_examples(self):
        self.assertEqual(g_combinatorial(7, 2), PrimeFraction())
        self.assertEqual(g_combinatorial(7, 4), PrimeFraction(Q=(11,), q=(7,)))
        self.assertEqual(g_combinatorial(7, 6), PrimeFraction(Q=(11,), q=(5,)))
        self.assertEqual(g_combinatorial(13, 12), PrimeFraction(Q=(17,), q=(5,)))

    def test_chain_and_lower_bound(self):
        for p_k in (97, 113, 199):
            p_next = next_prime(p_k + 1)
            for m in range(p_next - p_k, p_next - 2, 2):
                result = g_combinatorial(p_k, m)
                result.check_chain(p_k, p_next, m)
                low, _ = g_bounds(p_k, m)
                self.assertGreaterEqual(result.value, low, (p_k, m))

    def test_cap(self):
        original = HConfig.G_COMBINATORIAL_CAP
        HConfig.G_COMBINATORIAL_CAP = 10
        try:
            with self.assertRaises(ResourceError):
                g_combinatorial(97, 50)
            self.assertGreater(g_combinatorial(97, 50, enforce_cap=False).value, 1)
        finally:
            HConfig.G_COMBINATORIAL_CAP = original


class GTests(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(g(7, 0).value, 1)
        self.assertEqual(g(7, 2).value, 1)
        self.assertEqual(g(7, 4).value, Fraction(11, 7))
        self.assertEqual(g(7, 6).value, Fraction(11, 5))
        self.assertEqual(g(13, 12).value, Fraction(17, 5))

    def test_odd_m_rounds_down(self):
        self.assertEqual(g(7, 5), g(7, 4))
        self.assertEqual(g(13, 11), g(13, 10))

    def test_routing(self):
        self.assertEqual(g(7, 2).method, "trivial")
        self.assertEqual(g(97, 6).method, "combinatorial")

    def test_monotone_in_m(self):
        for p_k in (5, 23, 97, 113):
            p_next = next_prime(p_k + 1)
            values = [g(p_k, m).value for m in range(0, p_next - 2, 2)]
            self.assertEqual(values, sorted(values), p_k)

    @settings(max_examples=40, derandomize=True, deadline=None)
    @given(st.integers(5, 2000).map(prev_prime), st.integers(0, 10**6))
    def test_bounds_sandwich(self, p_k, raw):
        p_next = next_prime(p_k + 1)
        m = raw % (p_next - 2)
        low, high = g_bounds(p_k, m)
        value = g(p_k, m).value
        self.assertLessEqual(low, value)
        self.assertLessEqual(value, high)

    def test_bounds_meet_when_gap_is_prime(self):
        # p_{k+1} - m = 5 is prime
        low, high = g_bounds(7, 6)
        self.assertEqual(low, high)
        self.assertEqual(low, Fraction(11, 5))

    def test_errors(self):
        for p_k, m in ((4, 2), (8, 2), (1, 0), (7, 9), (7, -1)):
            with self.assertRaises(DomainError):
                g(p_k, m)


class FastTests(unittest.TestCase):
    def test_matches_combinatorial(self):
        for p_k, step in ((101, 2), (113, 2), (199, 2), (523, 14), (997, 26)):
            p_next = next_prime(p_k + 1)
            for m in range(p_next - p_k, p_next - 2, step):
                try:
                    fast = g_fast(p_k, m)
                except DeltaSearchError:
                    continue
                self.assertEqual(fast, g_combinatorial(p_k, m), (p_k, m))
                self.assertEqual(fast.method, "fast")

    def test_zero_shift(self):
        # 23 - 6 = 17 is prime
        result = g_fast(19, 6)
        self.assertEqual(result.delta, 0)
        self.assertEqual(result, PrimeFraction(Q=(23,), q=(17,)))

    def test_odd_m_uses_the_even_value_below(self):
        self.assertEqual(g_fast(19, 7), PrimeFraction(Q=(23,), q=(17,)))
        self.assertEqual(g_fast(19, 7), g_combinatorial(19, 7))
        p_next = next_prime(114)
        for m in range(p_next - 113 + 1, p_next - 2, 2):
            try:
                fast = g_fast(113, m)
            except DeltaSearchError:
                continue
            self.assertEqual(fast, g_fast(113, m - 1), m)
            self.assertEqual(fast, g_combinatorial(113, m), m)

    def test_flagship_argument(self):
        result = g(5477081, 4935150)
        self.assertEqual(result.method, "fast")
        self.assertEqual(result.delta, 18)
        self.assertEqual(result.inner_evaluations, 1)
        self.assertEqual(result.Q, (5477089, 5477093))
        self.assertEqual(result.q, (541951, 5477081))
        self.assertLessEqual(result.ell, 4935150)

    def test_no_shift_within_cap(self):
        # 1013 - 1004 = 9 is composite and no other shift is allowed
        with self.assertRaises(DeltaSearchError):
            g_fast(1009, 1004, delta_cap=0)

    def test_errors(self):
        with self.assertRaises(DomainError):
            g_fast(7, 2)


if __name__ == '__main__':
    unittest.main()
