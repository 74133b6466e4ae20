"""Running prime sums over consecutive sieve blocks."""

from typing import Optional

import numpy as np

from config import SieveConfig
from src.errors import InvariantError
from src.models import Weight, IDENTITY
from src.primes import sieve_segment, weighted_total


def exact_dot(a: np.ndarray, b: np.ndarray) -> int:
    """sum(a * b) as a Python int, for integer arrays with b >= 0.

    b is split into limbs narrow enough that every int64 partial dot
    product stays exact.
    """
    n = len(a)
    if n == 0:
        return 0
    if a.dtype == object or b.dtype == object:
        return int(np.dot(a.astype(object), b.astype(object)))
    amax = int(np.abs(a).max())
    bmax = int(b.max())
    if amax * bmax * n < 2**63:
        return int(np.dot(a, b))
    bits = 62 - amax.bit_length() - n.bit_length()
    if bits < 8:
        return int(np.dot(a.astype(object), b.astype(object)))
    mask = (1 << bits) - 1
    total = 0
    shift = 0
    rest = b.astype(np.int64)
    while rest.any():
        total += int(np.dot(a, rest & mask)) << shift
        rest = rest >> bits
        shift += bits
    return total


def exact_sum(a: np.ndarray) -> int:
    return exact_dot(a, np.ones(len(a), dtype=np.int64))


def prefix_weights(primes: np.ndarray, weight: Weight) -> np.ndarray:
    """Cumulative f(p) along an ascending block of primes."""
    if weight is not IDENTITY:
        return np.arange(1, len(primes) + 1, dtype=np.int64)
    if len(primes) and int(primes[-1]) * len(primes) >= 2**62:
        return np.cumsum(primes.astype(object))
    return np.cumsum(primes, dtype=np.int64)


class AscendingPrimeSum:
    """Answers pi_f(u) for a non-decreasing sequence of queries u >= start - 1.

    Blocks are sieved on demand from ``start`` upward; ``base_value`` must
    be pi_f(start - 1).
    """

    def __init__(self, start: int, base_value: int, weight: Weight, block_size: Optional[int] = None):
        self.weight = weight
        self.block_size = block_size or SieveConfig.BLOCK_SIZE
        self._lo = start
        self._hi = start - 1
        self._base = base_value
        self._primes = np.zeros(0, dtype=np.int64)
        # _prefix[i] = f of the first i primes of the block
        self._prefix = np.zeros(1, dtype=np.int64)
        self.blocks = 0

    def _advance(self) -> None:
        self._base += weighted_total(self._primes, self.weight)
        self._lo = self._hi + 1
        self._hi = self._lo + self.block_size - 1
        self._primes = sieve_segment(max(self._lo, 2), self._hi) if self._hi >= 2 else np.zeros(0, dtype=np.int64)
        prefix = prefix_weights(self._primes, self.weight)
        self._prefix = np.concatenate([np.zeros(1, dtype=prefix.dtype), prefix])
        self.blocks += 1

    def _reach(self, u: int) -> None:
        if u < self._lo - 1:
            raise InvariantError(f"block sieve desynchronized: query {u} is behind block [{self._lo}, {self._hi}]")
        while u > self._hi:
            self._advance()

    def value(self, u: int) -> int:
        self._reach(u)
        idx = int(np.searchsorted(self._primes, u, side="right"))
        return self._base + int(self._prefix[idx])

    def weighted_sum(self, us: np.ndarray, coefs: np.ndarray) -> int:
        """sum of coefs[i] * pi_f(us[i]) over an ascending array ``us``."""
        total = 0
        start = 0
        while start < len(us):
            self._reach(int(us[start]))
            end = int(np.searchsorted(us, self._hi, side="right"))
            idx = np.searchsorted(self._primes, us[start:end], side="right")
            c = coefs[start:end]
            total += self._base * exact_sum(c) + exact_dot(c, self._prefix[idx])
            start = end
        return total
