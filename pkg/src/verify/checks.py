"""Executable property suites over primes and the h_j(n) table.

Every comparison of rationals is done by cross-multiplication in exact
integers; the analytic window check is the only one that uses mpmath.
"""

from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from math import isqrt, prod
import time
from typing import Dict, Iterable, List, Optional, Set, Tuple

import gmpy2
import numpy as np

from config import VerifyConfig
from src.analytic import li, rh_gap_bound
from src.errors import DomainError
from src.g_func import g_bounds
from src.h_table import compute_table, first_primes, h_small, iter_hj_bounds
from src.logger import CheckEvent, logger
from src.models import CheckReport, HTable
from src.primes import next_prime, small_primes

# i_0(b): from this index on, p_i + p_{i-1} < p_{2i-b}
I0_TABLE = {
    1: 3, 2: 4, 3: 7, 4: 8, 5: 18, 6: 19, 7: 27, 8: 28, 9: 36, 10: 39,
    12: 50, 13: 53, 18: 85, 30: 149, 3675: 33127,
}


class BaseCheck(ABC):
    """One property suite; ``run`` builds the report, ``execute`` also times and logs it."""
    name = ""
    # ceiling applied to a shared --limit; None means no ceiling
    max_limit: Optional[int] = None
    requested_limit: Optional[int] = None

    @classmethod
    def clamp(cls, limit: int) -> int:
        return limit if cls.max_limit is None else min(limit, cls.max_limit)

    def __init__(self, **kwargs):
        pass

    @abstractmethod
    def run(self) -> CheckReport:
        pass

    def execute(self) -> CheckReport:
        start = time.monotonic()
        report = self.run()
        if self.requested_limit is not None:
            report.details["requested_limit"] = self.requested_limit
        logger.log(CheckEvent(
            name=report.name,
            domain=str(report.domain),
            passed=report.passed,
            violations=report.violation_count,
            equality_witnesses=report.equality_count,
            seconds=round(time.monotonic() - start, 6),
        ), "verify")
        return report


class GapLemmaCheck(BaseCheck):
    """Prime gaps: m* <= 11m/8 and *m >= 7m/10; a prime in [p + p', pp' - p + 1];
    for odd p < p' with pp' != 15, a prime in [p + p', 5pp'/6 - p]."""
    name = "gap_lemmas"

    def __init__(self, limit: int = VerifyConfig.GAP_LIMIT):
        if limit < 10:
            raise DomainError(f"gap checks need limit >= 10, got {limit}")
        self.limit = limit

    def run(self) -> CheckReport:
        limit = self.limit
        report = CheckReport(name=self.name, domain={"limit": limit})
        # Bertrand: every m <= limit has m* < 2m
        primes = small_primes(2 * limit + 64)

        m = np.arange(2, limit + 1, dtype=np.int64)
        above = primes[np.searchsorted(primes, m, side="left")]
        below = primes[np.searchsorted(primes, m, side="right") - 1]
        for i in np.flatnonzero((8 * above > 11 * m) | (10 * below < 7 * m)).tolist():
            report.violate({"property": "nearest_primes", "m": int(m[i]), "next": int(above[i]), "prev": int(below[i])})
        report.checked += len(m)

        if limit > VerifyConfig.RATIO_START:
            tail = primes[(primes >= VerifyConfig.RATIO_START) & (primes <= limit)]
            for i in np.flatnonzero(100000 * tail[1:] >= 100025 * tail[:-1]).tolist():
                report.violate({"property": "consecutive_ratio", "p": int(tail[i]), "next": int(tail[i + 1])})
            report.checked += max(len(tail) - 1, 0)
            report.details["ratio_pairs"] = max(len(tail) - 1, 0)

        small = primes[primes <= isqrt(limit)].tolist()
        pairs = 0
        for i, p in enumerate(small):
            for p2 in small[i + 1:]:
                pairs += 1
                nearest = int(primes[np.searchsorted(primes, p + p2, side="left")])
                ceiling = p * p2 - p + 1
                if nearest > ceiling:
                    report.violate({"property": "pair_gap", "p": p, "p2": p2, "prime": nearest})
                elif nearest == ceiling:
                    report.confirm({"property": "pair_gap", "p": p, "p2": p2, "prime": nearest})
                # 6 p'' <= 5 p p' - 6 p
                if p >= 3 and p * p2 != 15 and 6 * nearest > 5 * p * p2 - 6 * p:
                    report.violate({"property": "pair_gap_five_sixths", "p": p, "p2": p2, "prime": nearest})
        report.checked += pairs
        report.details["pairs"] = pairs
        report.details["excluded"] = [(3, 5)]
        return report


class PiSumTableCheck(BaseCheck):
    """p_i + p_{i-1} <= p_{2i-1} for i >= 2, and the tabulated i_0(b) in range."""
    name = "pi_sum_table"
    max_limit = VerifyConfig.PI_SUM_IMAX

    def __init__(self, imax: int = VerifyConfig.PI_SUM_IMAX):
        if not 2 <= imax <= VerifyConfig.PI_SUM_IMAX:
            raise DomainError(f"imax must lie in [2, {VerifyConfig.PI_SUM_IMAX}], got {imax}")
        self.imax = imax

    def run(self) -> CheckReport:
        imax = self.imax
        report = CheckReport(name=self.name, domain={"imax": imax})
        primes = np.array(first_primes(2 * imax), dtype=np.int64)

        i = np.arange(2, imax + 1, dtype=np.int64)
        total = primes[i - 1] + primes[i - 2]
        # b_i = 2i - 1 - pi(p_i + p_{i-1})
        b = 2 * i - 1 - np.searchsorted(primes, total, side="right")
        for idx in np.flatnonzero(total > primes[2 * i - 2]).tolist():
            report.violate({"i": int(i[idx]), "sum": int(total[idx]), "b": int(b[idx])})
        for idx in np.flatnonzero(total == primes[2 * i - 2]).tolist():
            report.confirm({"i": int(i[idx]), "sum": int(total[idx])})
        report.checked += len(i)

        found, skipped = {}, []
        for bound, expected in I0_TABLE.items():
            if expected > imax:
                skipped.append(bound)
                continue
            late = i[b < bound]
            i0 = int(late.max()) + 1 if len(late) else 2
            found[bound] = i0
            report.checked += 1
            if i0 != expected:
                report.violate({"b": bound, "i0": i0, "expected": expected})
        report.details["i0"] = found
        if skipped:
            report.details["beyond_imax"] = skipped
        return report


class TableCheck(BaseCheck):
    """Base for the suites reading a full-alphabet table up to nmax."""
    max_limit = VerifyConfig.TABLE_NMAX_MAX

    def __init__(self, nmax: int = VerifyConfig.TABLE_NMAX, table: Optional[HTable] = None):
        if nmax < 2:
            raise DomainError(f"table checks need nmax >= 2, got {nmax}")
        if table is not None and (not table.full or table.nmax < nmax):
            raise DomainError(f"a full table up to {nmax} is required")
        self.nmax = nmax
        self._table = table

    @property
    def table(self) -> HTable:
        if self._table is None:
            self._table = compute_table(self.nmax)
        return self._table

    def share(self, table: HTable) -> None:
        if not table.full or table.nmax < self.nmax:
            raise DomainError(f"a full table up to {self.nmax} is required")
        self._table = table

    def _primes(self) -> List[int]:
        """p_1 ... p_{K+2}, K = k(nmax)."""
        return first_primes(len(self.table.sigma) + 1)


class StructureCheck(TableCheck):
    """h(sigma_j) = N_j, h_j(sigma_{j+r} - sigma_r) = p_{r+1}...p_{r+j},
    the two-sided bounds on h_j(n) with their exact case, P+(h(n)) < p_{k+1} + p_{k+2}
    and N_k G_low <= h(n) <= N_k G_high for G = h(n) / N_k."""
    name = "structure_props"

    def run(self) -> CheckReport:
        nmax, table = self.nmax, self.table
        report = CheckReport(name=self.name, domain={"nmax": nmax})
        sigma = table.sigma
        primes = small_primes(2 * nmax + 64).tolist()
        sums = [0]
        for p in primes:
            sums.append(sums[-1] + p)

        for j in range(1, len(sigma) - 1):
            report.checked += 1
            if h_small(sigma[j], table) != prod(primes[:j]):
                report.violate({"property": "primorial", "j": j})

        for j in range(1, table.jmax + 1):
            r = 0
            while sums[j + r] - sums[r] <= nmax:
                n = sums[j + r] - sums[r]
                report.checked += 1
                if table.value(j, n) != prod(primes[r: r + j]):
                    report.violate({"property": "shifted_primorial", "j": j, "r": r, "n": n})
                r += 1

        for j in range(1, table.jmax + 1):
            for n, bounds in iter_hj_bounds(j, nmax):
                value = table.value(j, n)
                report.checked += 1
                upper = bounds.upper
                if value < bounds.lower or value * upper.denominator > upper.numerator:
                    report.violate({"property": "bounds", "j": j, "n": n, "value": value})
                elif bounds.exact:
                    if value == bounds.lower:
                        report.confirm({"property": "exact", "j": j, "n": n, "q": bounds.q})
                    else:
                        report.violate({"property": "exact", "j": j, "n": n, "value": value})

        ordered = self._primes()
        primorials: Dict[int, int] = {}
        for n in range(2, nmax + 1):
            k = table.k_of(n)
            value = h_small(n, table)
            bound = ordered[k] + ordered[k + 1]
            if bound not in primorials:
                primorials[bound] = gmpy2.primorial(bound - 1)
            report.checked += 1
            # squarefree v has P+(v) < bound iff v divides N(bound - 1)
            if primorials[bound] % value:
                report.violate({"property": "largest_prime", "n": n, "bound": bound})

            p_k, m = ordered[k - 1], n - sigma[k]
            if p_k < 5 or m > ordered[k] - 3:
                continue
            low, high = g_bounds(p_k, m)
            base = gmpy2.primorial(p_k)
            report.checked += 1
            if value * low.denominator < low.numerator * base or value * high.denominator > high.numerator * base:
                report.violate({"property": "g_sandwich", "n": n, "p_k": p_k, "m": m})
            elif low == high:
                report.confirm({"property": "g_sandwich", "n": n, "p_k": p_k, "m": m})
        return report


class ParityCheck(TableCheck):
    """Plateaus of h_k and h_{k-1} just below sigma_{k+1}."""
    name = "parity"

    def run(self) -> CheckReport:
        nmax, table = self.nmax, self.table
        report = CheckReport(name=self.name, domain={"nmax": nmax})
        sigma = table.sigma
        primes = self._primes()
        kmax = len(sigma) - 2

        for k in range(2, kmax + 1):
            for a in range(4, primes[k], 2):
                n = sigma[k + 1] - a
                if n > nmax:
                    continue
                report.checked += 1
                if table.value(k, n) == table.value(k, n - 1):
                    report.confirm({"property": "even_plateau", "k": k, "a": a})
                else:
                    report.violate({"property": "even_plateau", "k": k, "a": a})

        for k in range(2, kmax + 1):
            block = prod(primes[: k + 1])
            for q in primes[1:k]:
                m = sigma[k + 1] - q - 1
                if m > nmax:
                    continue
                report.checked += 1
                target = block // (2 * q)
                if table.value(k - 1, m) == table.value(k - 1, m - 1) == target:
                    report.confirm({"property": "drop_two_and_q", "k": k, "q": q})
                else:
                    report.violate({"property": "drop_two_and_q", "k": k, "q": q})

        for k in range(1, kmax + 1):
            m = sigma[k + 1] - 1
            if m > nmax:
                continue
            report.checked += 1
            target = prod(primes[: k + 1]) // 2
            if table.value(k, m) == table.value(k, m - 1) == target:
                report.confirm({"property": "drop_two", "k": k})
            else:
                report.violate({"property": "drop_two", "k": k})
        return report


class IncreasingCheck(TableCheck):
    """6 h_{j-1}(n) <= 5 h_j(n) for 2 <= j <= k(n), equal exactly when
    j = k(n) and n is sigma_{j+1} - 4 or sigma_{j+1} - 5; plus the strict
    6/5 growth wherever two odd primes p < p' outside h_{j-1}(n) have
    p + p' <= P+(h_{j-1}(n))."""
    name = "increasing"

    def expected_equalities(self) -> Set[Tuple[int, int]]:
        sigma = self.table.sigma
        expected = set()
        for k in range(2, len(sigma) - 1):
            for n in (sigma[k + 1] - 4, sigma[k + 1] - 5):
                if sigma[k] <= n <= self.nmax:
                    expected.add((k, n))
        return expected

    def run(self) -> CheckReport:
        nmax, table = self.nmax, self.table
        report = CheckReport(name=self.name, domain={"nmax": nmax})
        odd = self._primes()[1:]
        primorials: Dict[int, int] = {}
        found = set()

        for n in range(2, nmax + 1):
            k = table.k_of(n)
            report.checked += 1
            if table.value(1, n) < 2 * table.value(0, n):
                report.violate({"property": "first_step", "n": n})
            for j in range(2, k + 1):
                prev, cur = table.value(j - 1, n), table.value(j, n)
                report.checked += 1
                if 6 * prev > 5 * cur:
                    report.violate({"property": "five_sixths", "j": j, "n": n})
                elif 6 * prev == 5 * cur:
                    found.add((j, n))
                if n >= 5:
                    self._growth(report, j, n, prev, cur, odd, primorials)

        expected = self.expected_equalities()
        for j, n in sorted(found & expected):
            report.confirm({"j": j, "n": n})
        for j, n in sorted(found - expected):
            report.violate({"property": "unexpected_equality", "j": j, "n": n})
        for j, n in sorted(expected - found):
            report.violate({"property": "missing_equality", "j": j, "n": n})
        return report

    @staticmethod
    def _growth(report: CheckReport, j: int, n: int, prev: int, cur: int, odd: List[int], primorials: Dict[int, int]) -> None:
        # the two smallest odd primes outside prev minimise p + p'
        outside = []
        for p in odd:
            if prev % p:
                outside.append(p)
                if len(outside) == 2:
                    break
        if len(outside) < 2:
            report.skip((j, n))
            return
        bound = outside[0] + outside[1]
        if bound not in primorials:
            primorials[bound] = gmpy2.primorial(bound - 1)
        if primorials[bound] % prev == 0:
            # P+(prev) < p + p'
            report.skip((j, n))
        elif 5 * cur <= 6 * prev:
            report.violate({"property": "six_fifths_growth", "j": j, "n": n})


class RhWindowCheck(BaseCheck):
    """Li(p'^2) - b(p') <= pi_id(p) <= Li(p^2) + b(p) for primes 41 <= p <= limit,
    where p' is the prime after p and b(x) = (5 / (24 pi)) x^(3/2) log x.

    pi_id is constant on [p, p'), so the pair of inequalities covers every x in between.
    """
    name = "rh_window"

    def __init__(self, limit: int = VerifyConfig.RH_LIMIT):
        if limit < 41:
            raise DomainError(f"the window is checked from 41 on, got limit={limit}")
        self.limit = limit

    def run(self) -> CheckReport:
        report = CheckReport(name=self.name, domain={"limit": self.limit})
        primes = small_primes(next_prime(self.limit + 1)).tolist()
        lower_margin = upper_margin = None
        total = 0
        for p, p_after in zip(primes, primes[1:]):
            total += p
            if p < 41:
                continue
            report.checked += 1
            below = total - (li(p_after * p_after) - rh_gap_bound(p_after))
            above = li(p * p) + rh_gap_bound(p) - total
            if below < 0:
                report.violate({"p": p, "side": "lower", "pi_id": total})
            if above < 0:
                report.violate({"p": p, "side": "upper", "pi_id": total})
            if lower_margin is None or below < lower_margin[1]:
                lower_margin = (p, below)
            if upper_margin is None or above < upper_margin[1]:
                upper_margin = (p, above)
        report.details["pi"] = len(primes) - 1
        report.details["pi_id"] = total
        report.details["lower_margin"] = (lower_margin[0], float(lower_margin[1]))
        report.details["upper_margin"] = (upper_margin[0], float(upper_margin[1]))
        return report


def check_gap_lemmas(limit: int = VerifyConfig.GAP_LIMIT) -> CheckReport:
    return GapLemmaCheck(limit).execute()


def check_pi_sum_table(imax: int = VerifyConfig.PI_SUM_IMAX) -> CheckReport:
    return PiSumTableCheck(imax).execute()


def check_structure_props(nmax: int = VerifyConfig.TABLE_NMAX, table: HTable = None) -> CheckReport:
    return StructureCheck(nmax, table).execute()


def check_parity(nmax: int = VerifyConfig.TABLE_NMAX, table: HTable = None) -> CheckReport:
    return ParityCheck(nmax, table).execute()


def check_increasing(nmax: int = VerifyConfig.TABLE_NMAX, table: HTable = None) -> CheckReport:
    return IncreasingCheck(nmax, table).execute()


def check_rh_window(limit: int = VerifyConfig.RH_LIMIT) -> CheckReport:
    return RhWindowCheck(limit).execute()


SUITES = {
    "gaps": GapLemmaCheck,
    "pi-sum": PiSumTableCheck,
    "structure": StructureCheck,
    "parity": ParityCheck,
    "increasing": IncreasingCheck,
    "rh": RhWindowCheck,
}


def build_checks(names: Optional[Iterable[str]] = None, limit: Optional[int] = None) -> List[BaseCheck]:
    """Instantiate the named suites (all by default).

    ``limit`` overrides each domain, clamped to the suite's ``max_limit``. Every
    suite validates its domain before the shared table is computed.
    """
    names = list(SUITES) if not names else list(names)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise DomainError(f"unknown suites {unknown}; expected some of {sorted(SUITES)}")

    checks = []
    for name in names:
        cls = SUITES[name]
        if limit is None:
            checks.append(cls())
            continue
        check = cls(cls.clamp(limit))
        if cls.clamp(limit) != limit:
            check.requested_limit = limit
        checks.append(check)

    table_checks = [check for check in checks if isinstance(check, TableCheck)]
    if table_checks:
        table = compute_table(max(check.nmax for check in table_checks))
        for check in table_checks:
            check.share(table)
    return checks


def run_checks(checks: List[BaseCheck], threads: int = 1) -> List[CheckReport]:
    """Execute checks, concurrently when asked; reports keep the input order."""
    if threads <= 1:
        return [check.execute() for check in checks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda check: check.execute(), checks))
