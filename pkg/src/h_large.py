"""h(n) for large n as N_k G(p_k, n'), kept in factored form.

k = k(n) is fixed by sigma_k <= n < sigma_{k+1} and n' = n - sigma_k.
Locating p_k starts from x = sqrt(Li^-1(n)), evaluates sigma(x) = pi_id(x)
and pi(x) exactly, then walks the primes between x and p_k.
"""

from __future__ import annotations

import math
import time
from functools import lru_cache
from math import isqrt, prod
from typing import Callable, Iterator, Optional

import gmpy2
import numpy as np

from config import HConfig, SieveConfig
from src.analytic import li_inverse, rh_gap_bound
from src.errors import CapacityError, DomainError, InvariantError, ResourceError
from src.g_func import g
from src.h_table import compute_table, first_primes, h_small
from src.logger import HEvent, LocateKEvent, logger
from src.models import IDENTITY, UNIT, FactoredH, HTable, KLocation, Weight
from src.prime_sum import pif
from src.primes import iter_prime_blocks, prev_prime, sieve_segment

MIN_WINDOW = 1 << 12

PrimeSum = Callable[[int, Weight], int]


def _windows(start: int, width: int, descending: bool) -> Iterator[np.ndarray]:
    """Prime blocks moving away from ``start``, each twice as wide as the last."""
    width = max(MIN_WINDOW, width)
    if descending:
        hi = start
        while hi >= 2:
            lo = max(2, hi - width + 1)
            yield sieve_segment(lo, hi)[::-1]
            hi = lo - 1
            width = min(2 * width, SieveConfig.BLOCK_SIZE)
    else:
        lo = start
        while True:
            hi = lo + width - 1
            yield sieve_segment(lo, hi)
            lo = hi + 1
            width = min(2 * width, SieveConfig.BLOCK_SIZE)


def _walk_up(n: int, start: int, sigma: int, k: int, p_k: int, width: int):
    """Add primes >= start while the sum stays <= n."""
    steps = 0
    for block in _windows(start, width, descending=False):
        for p in block.tolist():
            if sigma + p > n:
                return KLocation(n=n, p_k=p_k, sigma_k=sigma, p_next=p, k=k), steps
            sigma += p
            k += 1
            steps += 1
            p_k = p


def _walk_down(n: int, start: int, sigma: int, k: int, width: int):
    """Remove primes <= start until the sum drops to n or below."""
    steps = 0
    for block in _windows(start, width, descending=True):
        for p in block.tolist():
            sigma -= p
            k -= 1
            steps += 1
            if sigma <= n:
                return KLocation(n=n, p_k=prev_prime(p - 1), sigma_k=sigma, p_next=p, k=k), steps
    raise InvariantError(f"prime sums below {start} never dropped to {n}")


def locate_k(n: int, direct_threshold: Optional[int] = None, prime_sum: PrimeSum = pif) -> KLocation:
    """p_k, sigma_k and p_{k+1} with sigma_k <= n < sigma_k + p_{k+1}.

    ``prime_sum(x, weight)`` evaluates pi_f; callers may pass a cached one.
    """
    if n < 2:
        raise DomainError(f"k(n) is located for n >= 2, got {n}")
    if n > HConfig.MAX_N:
        raise CapacityError(f"n={n} exceeds the supported bound {HConfig.MAX_N}")
    direct_threshold = HConfig.LOCATE_DIRECT_THRESHOLD if direct_threshold is None else direct_threshold
    start = time.monotonic()

    if n < direct_threshold:
        route, x = "sieve", 0
        location, steps = _walk_up(n, 2, 0, 0, 1, MIN_WINDOW)
    else:
        route = "analytic"
        x = isqrt(int(li_inverse(n)))
        sigma = prime_sum(x, IDENTITY)
        count = prime_sum(x, UNIT)
        # an RH-sized error in sigma spans about bound * log(x) / x integers
        width = int(rh_gap_bound(x) * math.log(x) / x) if x >= 41 else MIN_WINDOW
        width = min(width, SieveConfig.BLOCK_SIZE)
        if sigma <= n:
            location, steps = _walk_up(n, x + 1, sigma, count, prev_prime(x), width)
        else:
            location, steps = _walk_down(n, x, sigma, count, width)

    logger.log(LocateKEvent(
        n=n,
        route=route,
        x_estimate=x,
        p_k=location.p_k,
        sigma_k=location.sigma_k,
        p_next=location.p_next,
        correction_primes=steps,
        seconds=round(time.monotonic() - start, 6),
    ), "h")
    return location


@lru_cache(maxsize=4)
def small_table(nmax: int) -> HTable:
    """Full-alphabet table shared by every small n."""
    return compute_table(max(nmax, 2))


def _from_table(n: int, table: HTable) -> FactoredH:
    if n <= 1:
        return FactoredH(n=n, base_prime=1, sigma_base=0, base_index=0, route="table")
    value = h_small(n, table)
    k = table.k_of(n)
    primes = first_primes(k + 1)
    p_k, p_next = primes[k - 1], primes[k]
    sigma_k = table.sigma[k]
    if n - sigma_k >= p_next - 2:
        return FactoredH(
            n=n, base_prime=p_next, sigma_base=sigma_k + p_next, base_index=k + 1,
            denominator=(2,), route="table",
        )
    return FactoredH(
        n=n,
        base_prime=p_k,
        sigma_base=sigma_k,
        base_index=k,
        numerator=tuple(p for p in table.alphabet if p > p_k and value % p == 0),
        denominator=tuple(p for p in primes[:k] if value % p),
        route="table",
    )


def h(
    n: int,
    small_n_threshold: Optional[int] = None,
    delta_cap: Optional[int] = None,
    prime_sum: PrimeSum = pif,
) -> FactoredH:
    """h(n), the largest product of distinct primes summing to at most n."""
    if n < 0:
        raise DomainError(f"h(n) needs n >= 0, got {n}")
    threshold = HConfig.SMALL_N_THRESHOLD if small_n_threshold is None else small_n_threshold
    start = time.monotonic()

    if n <= max(threshold, 1):
        result = _from_table(n, small_table(max(threshold, 2)))
    else:
        location = locate_k(n, prime_sum=prime_sum)
        p_k, p_next, n_prime = location.p_k, location.p_next, location.n_prime
        if n_prime >= p_next - 2:
            # h(sigma_{k+1} - 1) = h(sigma_{k+1} - 2) = N_{k+1} / 2
            result = FactoredH(
                n=n,
                base_prime=p_next,
                sigma_base=location.sigma_k + p_next,
                base_index=None if location.k is None else location.k + 1,
                denominator=(2,),
                route="parity",
            )
        else:
            fraction = g(p_k, n_prime, delta_cap)
            result = FactoredH(
                n=n,
                base_prime=p_k,
                sigma_base=location.sigma_k,
                base_index=location.k,
                numerator=fraction.Q,
                denominator=fraction.q,
                route=fraction.method,
                delta=fraction.delta,
                inner_evaluations=fraction.inner_evaluations,
            )

    if result.ell > n:
        raise InvariantError(f"h({n}) has prime sum {result.ell} > n")
    logger.log(HEvent(
        n=n,
        route=result.route,
        base_prime=result.base_prime,
        ell=result.ell,
        seconds=round(time.monotonic() - start, 6),
    ), "h")
    return result


def expand(value: FactoredH, budget: Optional[int] = None) -> int:
    """The integer N_b * prod(numerator) / prod(denominator)."""
    budget = HConfig.EXPANSION_BUDGET if budget is None else budget
    if value.base_prime > budget:
        raise ResourceError(f"primorial of {value.base_prime} exceeds the expansion budget {budget}")
    top = int(gmpy2.primorial(value.base_prime)) * prod(value.numerator)
    bottom = prod(value.denominator)
    result, rest = divmod(top, bottom)
    if rest:
        raise InvariantError(f"{bottom} does not divide N_b for base {value.base_prime}")
    return result


def ell(value: FactoredH) -> int:
    """sigma_b + sum(numerator) - sum(denominator)."""
    return value.ell


def log10_magnitude(value: FactoredH) -> Optional[float]:
    """log10 h, or None when the base prime is too large to sieve."""
    if value.base_prime > HConfig.LOG10_MAX_BASE:
        return None
    theta = math.fsum(
        float(np.log(block.astype(np.float64)).sum())
        for _, _, block in iter_prime_blocks(2, value.base_prime)
    )
    theta += math.fsum(math.log(p) for p in value.numerator)
    theta -= math.fsum(math.log(p) for p in value.denominator)
    return theta / math.log(10)
