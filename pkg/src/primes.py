"""Segmented sieve of Eratosthenes, prime navigation and base tables.

Segments are stored one byte per odd residue. Intervals whose square root
exceeds ``SieveConfig.MAX_BASE_SIEVE`` are pre-sieved by the base primes
and the survivors confirmed by a deterministic strong-probable-prime test.
"""

from __future__ import annotations

import threading
from math import isqrt
from typing import Iterator, Sequence, Tuple

import gmpy2
import numpy as np

from config import SieveConfig
from src.errors import CapacityError, DomainError, ResourceError
from src.models import PrimeTables, Weight, IDENTITY

INT64_MAX = 2**63 - 1


def small_primes(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array (plain odd-only sieve)."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit // 2 + 1, dtype=bool)  # index i <-> 2i + 1
    flags[0] = False
    for i in range(1, (isqrt(limit) - 1) // 2 + 1):
        if flags[i]:
            p = 2 * i + 1
            flags[p * p // 2::p] = False
    odd = 2 * np.flatnonzero(flags).astype(np.int64) + 1
    odd = odd[odd <= limit]
    return np.concatenate((np.array([2], dtype=np.int64), odd))


def is_prime(n: int) -> bool:
    """Deterministic primality below ``SieveConfig.DETERMINISTIC_LIMIT``."""
    if n < 2:
        return False
    for p in SieveConfig.PRIMALITY_BASES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n >= SieveConfig.DETERMINISTIC_LIMIT:
        raise CapacityError(f"{n} exceeds the deterministic primality range")
    return all(gmpy2.is_strong_prp(n, a) for a in SieveConfig.PRIMALITY_BASES)


class SegmentedSieve:
    """Sieves arbitrary intervals, growing its base primes on demand."""

    def __init__(self):
        self._base = small_primes(1 << 16)
        self._base_limit = 1 << 16
        self._lock = threading.Lock()

    def base_primes(self, limit: int) -> np.ndarray:
        if limit > self._base_limit:
            with self._lock:
                if limit > self._base_limit:
                    new_limit = max(limit, 2 * self._base_limit)
                    self._base = small_primes(new_limit)
                    self._base_limit = new_limit
        base = self._base
        return base[: int(np.searchsorted(base, limit, side="right"))]

    def segment(self, lo: int, hi: int) -> np.ndarray:
        """Primes in [lo, hi], ascending, as int64."""
        if lo < 2 or hi < lo:
            raise DomainError(f"segment needs 2 <= lo <= hi, got [{lo}, {hi}]")
        if hi > INT64_MAX:
            raise CapacityError(f"segment bound {hi} exceeds 64-bit storage")
        if (hi - lo) // 2 + 1 > SieveConfig.MEMORY_BUDGET_BYTES:
            raise ResourceError(f"segment [{lo}, {hi}] exceeds the memory budget")

        root = isqrt(hi)
        partial = root > SieveConfig.MAX_BASE_SIEVE
        base = self.base_primes(min(root, SieveConfig.MAX_BASE_SIEVE))

        first = lo | 1
        if first == 1:
            first = 3
        count = (hi - first) // 2 + 1 if first <= hi else 0
        flags = np.ones(count, dtype=bool)
        for p in base[1:].tolist():
            start = max(p * p, (first + p - 1) // p * p)
            if start % 2 == 0:
                start += p
            if start > hi:
                continue
            flags[(start - first) // 2::p] = False
        found = first + 2 * np.flatnonzero(flags).astype(np.int64)
        if partial:
            found = np.array([v for v in found.tolist() if is_prime(v)], dtype=np.int64)
        if lo <= 2:
            found = np.concatenate((np.array([2], dtype=np.int64), found))
        return found


_sieve = SegmentedSieve()


def sieve_segment(lo: int, hi: int) -> np.ndarray:
    """Exactly the primes p with lo <= p <= hi, ascending."""
    return _sieve.segment(lo, hi)


def iter_prime_blocks(
    lo: int,
    hi: int,
    block_size: int = None,
    descending: bool = False,
) -> Iterator[Tuple[int, int, np.ndarray]]:
    """Yield (block_lo, block_hi, primes) covering [lo, hi] block by block.

    Blocks come in ascending order, or descending when asked; the primes
    inside a block are always ascending.
    """
    block_size = block_size or SieveConfig.BLOCK_SIZE
    lo = max(lo, 2)
    if hi < lo:
        return
    starts = range(lo, hi + 1, block_size)
    if descending:
        starts = reversed(starts)
    for start in starts:
        end = min(start + block_size - 1, hi)
        yield start, end, sieve_segment(start, end)


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes in [lo, hi] as Python ints, for any hi in range."""
    if hi < max(lo, 2):
        return []
    if hi - lo < 64 or hi > INT64_MAX:
        start = max(lo, 2)
        return [v for v in range(start, hi + 1) if is_prime(v)]
    return [v for _, _, block in iter_prime_blocks(lo, hi) for v in block.tolist()]


def weighted_total(primes: np.ndarray, weight: Weight) -> int:
    """Exact sum of f(p) over an int64 array of primes."""
    if len(primes) == 0:
        return 0
    if weight is not IDENTITY:
        return len(primes)
    if int(primes[-1]) * len(primes) < 2**62:
        return int(primes.sum(dtype=np.int64))
    return sum(primes.tolist())


def prime_sum_by_sieve(x: int, weight: Weight) -> int:
    """pi_f(x) by summing every prime up to x."""
    return sum(weighted_total(block, weight) for _, _, block in iter_prime_blocks(2, x))


def next_prime(m: int) -> int:
    """m*, the smallest prime >= m."""
    if m <= 2:
        return 2
    n = m if m % 2 else m + 1
    while not is_prime(n):
        n += 2
    return n


def prev_prime(m: int) -> int:
    """*m, the largest prime <= m."""
    if m < 2:
        raise DomainError(f"no prime is <= {m}")
    if m == 2:
        return 2
    n = m if m % 2 else m - 1
    while not is_prime(n):
        n -= 2
    return n


def build_base_tables(y: int, weights: Sequence[Weight]) -> PrimeTables:
    """Primes, pi(t), pi_f(prime[k]), Moebius and least prime factor up to y."""
    if y < 2:
        raise DomainError(f"base tables need y >= 2, got {y}")
    # pi, lpf and the prefix sums take 8 bytes per entry, mu one
    if 25 * (y + 1) > SieveConfig.MEMORY_BUDGET_BYTES:
        raise ResourceError(f"base tables up to y={y} exceed the memory budget")

    primes = small_primes(y)
    prime = np.concatenate((np.array([1], dtype=np.int64), primes))

    is_p = np.zeros(y + 1, dtype=np.int64)
    is_p[primes] = 1
    pi = np.cumsum(is_p)

    piftab = {}
    for weight in {w.id: w for w in list(weights) + [IDENTITY]}.values():
        values = weight.on_array(primes)
        piftab[weight.id] = np.concatenate((np.zeros(1, dtype=np.int64), np.cumsum(values, dtype=np.int64)))

    mu = np.ones(y + 1, dtype=np.int8)
    mu[0] = 0
    lpf = np.zeros(y + 1, dtype=np.int64)
    for p in primes.tolist():
        mu[p::p] *= -1
        if p * p <= y:
            mu[p * p::p * p] = 0
            multiples = lpf[p * p::p]
            multiples[multiples == 0] = p
    unset = lpf == 0
    lpf[unset] = np.arange(y + 1, dtype=np.int64)[unset]
    lpf[0] = 0
    lpf[1] = y + 1

    return PrimeTables(y=y, prime=prime, pi=pi, piftab=piftab, mu=mu, lpf=lpf)
