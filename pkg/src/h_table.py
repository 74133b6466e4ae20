"""Dense tables of h_j(n) by 0/1 knapsack over primes.

h_j(n) is the largest product of j distinct primes whose sum is at most n.
Adding the primes of the alphabet one at a time,

    h_j(n) <- max(h_j(n), p * h_{j-1}(n - p)),

with j running downward so each prime is used at most once.
"""

from __future__ import annotations

from bisect import bisect_left
from fractions import Fraction
from itertools import accumulate
from math import prod
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from config import HConfig
from src.errors import DomainError, ResourceError
from src.models import HTable
from src.primes import is_prime, next_prime, small_primes


def first_primes(count: int) -> List[int]:
    """p_1, ..., p_count."""
    limit = 32
    while True:
        primes = small_primes(limit)
        if len(primes) >= count:
            return primes[:count].tolist()
        limit *= 2


def prime_sums_through(n: int) -> Tuple[int, ...]:
    """(sigma_0, sigma_1, ...) up to and including the first sigma above n."""
    sigma = [0]
    p = 2
    while sigma[-1] <= n:
        sigma.append(sigma[-1] + p)
        p = next_prime(p + 1)
    return tuple(sigma)


def _check_alphabet(alphabet: Sequence[int]) -> Tuple[int, ...]:
    primes = tuple(int(p) for p in alphabet)
    if any(a >= b for a, b in zip(primes, primes[1:])):
        raise DomainError(f"alphabet must be strictly ascending: {primes}")
    bad = [p for p in primes if not is_prime(p)]
    if bad:
        raise DomainError(f"alphabet contains non-primes: {bad}")
    return primes


def compute_table(nmax: int, alphabet: Optional[Sequence[int]] = None) -> HTable:
    """h_j(n, alphabet) for 0 <= n <= nmax; ``alphabet=None`` means every prime.

    The full alphabet runs over all primes up to nmax. The bound
    P+(h(n)) < p_{k+1} + p_{k+2} only covers j = k(n), and h_1(n) alone
    already reaches the largest prime <= n.
    """
    if nmax < 2:
        raise DomainError(f"table needs nmax >= 2, got {nmax}")
    sigma = prime_sums_through(nmax)
    full = alphabet is None
    if full:
        letters = tuple(small_primes(nmax).tolist())
        jmax = len(sigma) - 2
    else:
        letters = tuple(p for p in _check_alphabet(alphabet) if p <= nmax)
        jmax = sum(1 for s in accumulate(letters) if s <= nmax)

    cells = (jmax + 1) * (nmax + 1)
    if cells > HConfig.MAX_TABLE_CELLS:
        raise ResourceError(f"a table of {cells} cells exceeds the limit of {HConfig.MAX_TABLE_CELLS}")

    # least sum of j letters; rows[j][n] stays 0 below it
    floor = [0] + list(accumulate(letters))
    rows = [np.ones(nmax + 1, dtype=object)]
    rows += [np.zeros(nmax + 1, dtype=object) for _ in range(jmax)]
    for r, p in enumerate(letters, start=1):
        for j in range(min(jmax, r), 0, -1):
            lo = p + floor[j - 1]
            if lo > nmax:
                continue
            # 0 marks "undefined" and stays 0 under multiplication
            candidate = p * rows[j - 1][floor[j - 1]: nmax + 1 - p]
            rows[j][lo:] = np.maximum(rows[j][lo:], candidate)

    return HTable(nmax=nmax, alphabet=letters, rows=rows, full=full, sigma=sigma)


def h_small(n: int, table: HTable) -> int:
    """h(n) = h_{k(n)}(n), read from a full-alphabet table."""
    if not table.full:
        raise DomainError("h(n) = h_k(n) only holds over the full prime alphabet")
    if not 0 <= n <= table.nmax:
        raise DomainError(f"n={n} outside table range [0, {table.nmax}]")
    if n <= 1:
        return 1
    return table.value(table.k_of(n), n)


def brute_force_h(n: int) -> Tuple[int, int]:
    """(h(n), omega(h(n))) by exhaustive search over sets of primes."""
    if n < 0:
        raise DomainError(f"h(n) needs n >= 0, got {n}")
    if n > HConfig.BRUTE_FORCE_MAX_N:
        raise DomainError(f"exhaustive search is limited to n <= {HConfig.BRUTE_FORCE_MAX_N}, got {n}")
    primes = small_primes(n).tolist()
    best = (1, 0)

    def search(start: int, budget: int, value: int, count: int) -> None:
        nonlocal best
        if value > best[0]:
            best = (value, count)
        for i in range(start, len(primes)):
            p = primes[i]
            if p > budget:
                break
            search(i + 1, budget - p, value * p, count + 1)

    search(0, n, 1, 0)
    return best


class HjBounds(NamedTuple):
    r: int
    n_prime: int
    # p_{j+r+1} - n'
    gap: int
    # next prime >= gap
    q: int
    lower: int
    upper: Fraction

    @property
    def exact(self) -> bool:
        return self.q == self.gap


def _bounds_at(j: int, n: int, r: int, primes: Sequence[int], sigma: Sequence[int], block: int) -> HjBounds:
    """block = p_{r+1} ... p_{j+r+1}."""
    n_prime = n - (sigma[j + r] - sigma[r])
    gap = primes[j + r] - n_prime
    # p_{r+1} < gap <= p_{j+r+1}
    q = primes[bisect_left(primes, gap)]
    return HjBounds(r=r, n_prime=n_prime, gap=gap, q=q, lower=block // q, upper=Fraction(block, gap))


def _prime_sums(count: int) -> Tuple[List[int], List[int]]:
    primes = first_primes(count)
    return primes, [0] + list(accumulate(primes))


def hj_bounds(j: int, n: int) -> HjBounds:
    """Bracket h_j(n) between N_{j+r+1} / (q N_r) and N_{j+r+1} / (N_r (p_{j+r+1} - n')).

    r >= 0 is fixed by sigma_{j+r} - sigma_r <= n < sigma_{j+r+1} - sigma_{r+1}
    and n' = n - (sigma_{j+r} - sigma_r); the bounds meet when p_{j+r+1} - n'
    is prime.
    """
    if j < 1:
        raise DomainError(f"bounds need j >= 1, got {j}")
    count = j + 2
    primes, sigma = _prime_sums(count)
    if n < sigma[j]:
        raise DomainError(f"h_{j}({n}) is undefined below sigma_{j}={sigma[j]}")
    r = 0
    while True:
        if len(primes) < j + r + 2:
            count *= 2
            primes, sigma = _prime_sums(count)
        if n < sigma[j + r + 1] - sigma[r + 1]:
            return _bounds_at(j, n, r, primes, sigma, prod(primes[r: j + r + 1]))
        r += 1


def iter_hj_bounds(j: int, nmax: int) -> Iterator[Tuple[int, HjBounds]]:
    """(n, hj_bounds(j, n)) for sigma_j <= n <= nmax, advancing r incrementally."""
    if j < 1:
        raise DomainError(f"bounds need j >= 1, got {j}")
    count = j + 2
    primes, sigma = _prime_sums(count)
    r, block, block_r = 0, 0, -1
    for n in range(sigma[j], nmax + 1):
        while True:
            if len(primes) < j + r + 2:
                count *= 2
                primes, sigma = _prime_sums(count)
            if n < sigma[j + r + 1] - sigma[r + 1]:
                break
            r += 1
        if block_r != r:
            block, block_r = prod(primes[r: j + r + 1]), r
        yield n, _bounds_at(j, n, r, primes, sigma, block)
