# Read tests/knowledge.md in this directory for how to run tests.
import os
import sys
import unittest
from unittest import mock
from pathlib import Path

# Ensure the src package is importable when tests are run directly
ROOT_PATH = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT_PATH))

from config import LogConfig, VerifyConfig
from src.errors import DomainError
from src.analytic import li, rh_gap_bound
from src.h_table import compute_table
from src.primes import small_primes
from src.verify import (
    GapLemmaCheck,
    IncreasingCheck,
    ParityCheck,
    PiSumTableCheck,
    RhWindowCheck,
    StructureCheck,
    build_checks,
    check_gap_lemmas,
    check_increasing,
    check_parity,
    check_pi_sum_table,
    check_rh_window,
    check_structure_props,
    run_checks,
)
from src.verify.checks import I0_TABLE, TableCheck

LogConfig.ENABLED = False

LONG_TESTS = os.environ.get("HPRIMES_LONG_TESTS", "0") == "1"


class GapLemmaTests(unittest.TestCase):
    def test_small_domain(self):
        report = check_gap_lemmas(10**4)
        self.assertTrue(report.passed, report.violations)
        self.assertIn({"property": "pair_gap", "p": 2, "p2": 3, "prime": 5}, report.equality_witnesses)
        self.assertEqual(report.details["excluded"], [(3, 5)])
        self.assertNotIn("ratio_pairs", report.details)

    def test_default_domain(self):
        report = check_gap_lemmas()
        self.assertTrue(report.passed, report.violations)
        self.assertGreater(report.details["ratio_pairs"], 0)


class PiSumTableTests(unittest.TestCase):
    def test_partial_table(self):
        report = check_pi_sum_table(200)
        self.assertTrue(report.passed, report.violations)
        expected = {b: i0 for b, i0 in I0_TABLE.items() if i0 <= 200}
        self.assertEqual(report.details["i0"], expected)
        self.assertEqual(report.details["beyond_imax"], [3675])
        # p_2 + p_1 = p_3
        self.assertIn({"i": 2, "sum": 5}, report.equality_witnesses)

    def test_full_table(self):
        report = check_pi_sum_table()
        self.assertTrue(report.passed, report.violations)
        self.assertEqual(report.details["i0"], I0_TABLE)
        self.assertNotIn("beyond_imax", report.details)


class TableSuiteTests(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.table = compute_table(1000)

    def test_structure(self):
        report = check_structure_props(300, self.table)
        self.assertTrue(report.passed, report.violations)
        self.assertGreater(report.equality_count, 0)

    def test_g_sandwich_catches_a_low_value(self):
        # h(23) = N_4 * 11/5 = 462, where both bounds on G(7, 6) meet
        table = compute_table(50)
        table.rows[4][23] = 461
        report = check_structure_props(50, table)
        self.assertFalse(report.passed)
        self.assertIn({"property": "g_sandwich", "n": 23, "p_k": 7, "m": 6}, report.violations)

    def test_parity(self):
        report = check_parity(1000, self.table)
        self.assertTrue(report.passed, report.violations)
        report = check_parity(50)
        self.assertIn({"property": "drop_two", "k": 3}, report.equality_witnesses)

    def test_increasing(self):
        report = check_increasing(50)
        self.assertTrue(report.passed, report.violations)
        witnesses = {(w["j"], w["n"]) for w in report.equality_witnesses}
        self.assertEqual(witnesses, {(2, 5), (2, 6), (3, 12), (3, 13), (4, 23), (4, 24), (5, 36), (5, 37)})

    def test_increasing_to_1000(self):
        report = check_increasing(1000, self.table)
        self.assertTrue(report.passed, report.violations)
        self.assertIn({"j": 4, "n": 23}, report.equality_witnesses)

    def test_expected_equalities(self):
        expected = IncreasingCheck(50).expected_equalities()
        self.assertIn((4, 23), expected)
        self.assertIn((2, 5), expected)
        self.assertNotIn((6, 53), expected)

    def test_tampered_table_fails(self):
        table = compute_table(50)
        table.rows[4][23] = 461
        report = check_parity(50, table)
        self.assertFalse(report.passed)
        self.assertEqual(report.decision, "FAIL")

    @unittest.skipUnless(LONG_TESTS, "set HPRIMES_LONG_TESTS=1")
    def test_default_domain(self):
        table = compute_table(VerifyConfig.TABLE_NMAX)
        for check in (check_structure_props, check_parity, check_increasing):
            report = check(VerifyConfig.TABLE_NMAX, table)
            self.assertTrue(report.passed, (report.name, report.violations))


class RhWindowTests(unittest.TestCase):
    def test_default_domain(self):
        report = check_rh_window()
        self.assertTrue(report.passed, report.violations)
        self.assertEqual(report.details["pi"], 384)
        self.assertEqual(report.details["pi_id"], 464653)
        self.assertEqual(report.checked, 384 - 12)

    def test_lower_side_uses_the_following_prime(self):
        # the tightest lower margin sits at p = 53, against Li(59^2) - b(59)
        p, margin = check_rh_window().details["lower_margin"]
        self.assertEqual(p, 53)
        self.assertGreater(margin, 1)
        self.assertLess(margin, 2)
        expected = sum(small_primes(53).tolist()) - (li(59 * 59) - rh_gap_bound(59))
        self.assertAlmostEqual(margin, float(expected), places=6)

    def test_window_holds_with_a_short_limit(self):
        report = check_rh_window(60)
        self.assertTrue(report.passed, report.violations)
        self.assertEqual(report.checked, 5)
        self.assertEqual(report.details["pi_id"], sum(small_primes(60).tolist()))


class BuildChecksTests(unittest.TestCase):
    def test_table_is_shared(self):
        checks = build_checks(["parity", "increasing"], limit=50)
        self.assertIs(checks[0].table, checks[1].table)
        self.assertEqual(checks[0].nmax, 50)

    def test_default_suites(self):
        checks = build_checks()
        self.assertEqual([c.name for c in checks],
                         ["gap_lemmas", "pi_sum_table", "structure_props", "parity", "increasing", "rh_window"])

    def test_unknown_suite(self):
        with self.assertRaises(DomainError):
            build_checks(["gaps", "bogus"])

    def test_threads_keep_order(self):
        checks = build_checks(["rh", "pi-sum", "parity"], limit=200)
        reports = run_checks(checks, threads=2)
        self.assertEqual([r.name for r in reports], ["rh_window", "pi_sum_table", "parity"])
        self.assertTrue(all(r.passed for r in reports))

    def test_bad_limit_fails_before_any_table_work(self):
        with mock.patch("src.verify.checks.compute_table") as build:
            with self.assertRaises(DomainError):
                build_checks(["parity", "rh"], limit=30)
        build.assert_not_called()

    def test_large_limit_is_clamped_per_suite(self):
        with mock.patch.object(TableCheck, "max_limit", 50):
            checks = build_checks(["pi-sum", "parity", "rh"], limit=10**5)
        pi_sum, parity, rh = checks
        self.assertEqual(pi_sum.imax, VerifyConfig.PI_SUM_IMAX)
        self.assertEqual(pi_sum.requested_limit, 10**5)
        self.assertEqual(parity.nmax, 50)
        self.assertEqual(parity.table.nmax, 50)
        self.assertEqual(rh.limit, 10**5)
        self.assertIsNone(rh.requested_limit)
        report = parity.execute()
        self.assertTrue(report.passed, report.violations)
        self.assertEqual(report.details["requested_limit"], 10**5)

    def test_constructor_domains(self):
        with self.assertRaises(DomainError):
            GapLemmaCheck(5)
        with self.assertRaises(DomainError):
            PiSumTableCheck(1)
        with self.assertRaises(DomainError):
            PiSumTableCheck(VerifyConfig.PI_SUM_IMAX + 1)
        with self.assertRaises(DomainError):
            StructureCheck(1)
        with self.assertRaises(DomainError):
            ParityCheck(50, compute_table(20))
        with self.assertRaises(DomainError):
            ParityCheck(20, compute_table(20, [2, 3, 5]))
        with self.assertRaises(DomainError):
            RhWindowCheck(40)


if __name__ == '__main__':
    unittest.main()
