"""Blockwise partial sieve over a wide partial-sum tree."""

from typing import List

import numpy as np

from config import PifConfig
from src.errors import CapacityError
from src.models import Weight, WeightId


def _row_sums(values: np.ndarray, fanout: int) -> np.ndarray:
    """Sums of consecutive runs of ``fanout`` entries, padded with zeros to a multiple of ``fanout``."""
    sums = values.reshape(-1, fanout).sum(axis=1)
    pad = -len(sums) % fanout
    return np.concatenate([sums, np.zeros(pad, dtype=np.int64)]) if pad else sums


def _grouped(rows: np.ndarray, amounts: np.ndarray):
    """Distinct sorted ``rows`` with the sum of ``amounts`` for each."""
    starts = np.flatnonzero(np.diff(rows)) + 1
    starts = np.concatenate([[0], starts])
    return rows[starts], np.add.reduceat(amounts, starts)


class PartialSumTree:
    """Non-negative int64 labels with batched prefix sums and deletions.

    Level 0 holds the labels; each level above holds the sums of
    ``2**fanout_bits`` consecutive entries of the level below, up to a
    top level of a single row.
    """

    def __init__(self, values: np.ndarray, fanout_bits: int = None):
        self.bits = fanout_bits or PifConfig.TREE_FANOUT_BITS
        self.fanout = 1 << self.bits
        values = np.asarray(values, dtype=np.int64)
        self._size = len(values)
        if self._size and int(values.max()) * self._size >= 2**63:
            raise CapacityError(f"{self._size} labels up to {int(values.max())} overflow int64 partial sums")
        # one spare slot keeps prefix(size) inside the top row
        pad = -(self._size + 1) % self.fanout
        level = np.concatenate([values, np.zeros(pad + 1, dtype=np.int64)])
        self.levels: List[np.ndarray] = [level]
        while len(level) > self.fanout:
            level = _row_sums(level, self.fanout)
            self.levels.append(level)

    @property
    def size(self) -> int:
        return self._size

    @property
    def labels(self) -> np.ndarray:
        return self.levels[0][: self._size]

    def prefix_many(self, counts: np.ndarray) -> np.ndarray:
        """For each c in ``counts``, the sum of the first c labels."""
        counts = np.clip(np.asarray(counts, dtype=np.int64), 0, self._size)
        out = np.empty(len(counts), dtype=np.int64)
        cols = np.arange(self.fanout, dtype=np.int64)
        chunk = PifConfig.QUERY_CHUNK
        for start in range(0, len(counts), chunk):
            c = counts[start: start + chunk]
            total = np.zeros(len(c), dtype=np.int64)
            for h, level in enumerate(self.levels):
                digit = (c >> (h * self.bits)) & (self.fanout - 1)
                row = c >> ((h + 1) * self.bits)
                block = level.reshape(-1, self.fanout)[row]
                total += np.where(cols < digit[:, None], block, 0).sum(axis=1)
            out[start: start + chunk] = total
        return out

    def prefix(self, count: int) -> int:
        """Sum of the first ``count`` labels."""
        return int(self.prefix_many(np.array([count]))[0])

    def total(self) -> int:
        return int(self.levels[-1].sum())

    def clear(self, positions: np.ndarray) -> int:
        """Zero the labels at the ascending distinct ``positions``; return what they held."""
        positions = np.asarray(positions, dtype=np.int64)
        if len(positions) == 0:
            return 0
        removed = self.levels[0][positions]
        self.levels[0][positions] = 0
        rows = positions
        for level in self.levels[1:]:
            rows, removed = _grouped(rows >> self.bits, removed)
            level[rows] -= removed
        return int(removed.sum())


class PhiSieve:
    """The integers of [lo, hi] labelled by f, with multiples of sieved primes removed.

    After ``sieve_out`` has run for p_1..p_b, ``prefix_query(u)`` is
    Phi(u, b) - Phi(lo - 1, b).
    """

    def __init__(self, lo: int, hi: int, weight: Weight):
        self.lo = lo
        self.hi = hi
        size = hi - lo + 1
        if weight.id is WeightId.IDENTITY:
            labels = np.arange(lo, hi + 1, dtype=np.int64)
        else:
            labels = np.ones(size, dtype=np.int64)
        self.tree = PartialSumTree(labels)

    @property
    def deleted(self) -> np.ndarray:
        return self.tree.labels == 0

    def prefix_query(self, u: int) -> int:
        """Sum of f(m) over unsieved m in [lo, u]."""
        if u < self.lo:
            return 0
        return self.tree.prefix(u - self.lo + 1)

    def prefix_many(self, us: np.ndarray) -> np.ndarray:
        """``prefix_query`` for an array of u."""
        return self.tree.prefix_many(np.asarray(us, dtype=np.int64) - (self.lo - 1))

    def total(self) -> int:
        return self.tree.total()

    def sieve_out(self, p: int) -> int:
        """Delete every multiple of p (p included) still present; return the removed weight."""
        first = (self.lo + p - 1) // p * p
        if first > self.hi:
            return 0
        return self.tree.clear(np.arange(first - self.lo, self.hi - self.lo + 1, p, dtype=np.int64))
