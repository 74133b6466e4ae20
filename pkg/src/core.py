import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterable, List, Optional, Tuple

from config import HConfig
from src.g_func import g
from src.h_large import expand, h, locate_k, log10_magnitude
from src.h_table import compute_table
from src.models import CheckReport, FactoredH, HTable, KLocation, PrimeFraction, Weight
from src.prime_sum import pif
from src.verify import build_checks, run_checks


class Core:
    """One session of computations sharing caches.

    Results of pi_f are cached by (x, weight) and tables by nmax; both
    caches are guarded by a single lock so concurrent h() calls can share
    them.
    """

    def __init__(self, threads: Optional[int] = None):
        self.threads = threads or HConfig.THREADS
        self._lock = threading.Lock()
        self._pif: Dict[Tuple[int, str], int] = {}
        self._tables: Dict[int, HTable] = {}

    def pif(self, x: int, weight: Weight) -> int:
        key = (x, weight.name)
        with self._lock:
            if key in self._pif:
                return self._pif[key]
        value = pif(x, weight)
        with self._lock:
            self._pif[key] = value
        return value

    def hj_table(self, nmax: int) -> HTable:
        with self._lock:
            table = self._tables.get(nmax)
        if table is None:
            table = compute_table(nmax)
            with self._lock:
                self._tables[nmax] = table
        return table

    def locate_k(self, n: int) -> KLocation:
        return locate_k(n, prime_sum=self.pif)

    def h(self, n: int) -> FactoredH:
        return h(n, prime_sum=self.pif)

    def h_many(self, ns: Iterable[int]) -> List[FactoredH]:
        """h(n) for each n, in input order."""
        ns = list(ns)
        if self.threads <= 1:
            return [self.h(n) for n in ns]
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(self.h, ns))

    def g(self, p_k: int, m: int) -> PrimeFraction:
        return g(p_k, m)

    def verify(self, suites: Optional[List[str]] = None, limit: Optional[int] = None) -> List[CheckReport]:
        return run_checks(build_checks(suites, limit), self.threads)

    def h_record(self, value: FactoredH, with_expansion: bool = False, with_log10: bool = False) -> dict:
        """The serialised form of h(n), optionally with its integer value and log10."""
        record = value.to_dict()
        if with_expansion:
            record["expanded"] = str(expand(value))
        if with_log10:
            magnitude = log10_magnitude(value)
            if magnitude is not None:
                record["log10"] = magnitude
        return record
