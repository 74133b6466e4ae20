"""G(p_k, m): the largest prime fraction Q_1...Q_s / (q_1...q_s) with

    3 <= q_s < ... < q_1 <= p_k < p_{k+1} <= Q_1 < ... < Q_s,
    sum (Q_i - q_i) <= m.

Small m goes through an exact knapsack over the candidate primes; large m
is reduced to a handful of small-m evaluations at p_{k+1} by a shift delta
that makes p_{k+1} - m + delta prime.
"""

from __future__ import annotations

import time
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np

from config import HConfig
from src.errors import DeltaSearchError, DomainError, InvariantError, ResourceError
from src.logger import GEvaluationEvent, logger
from src.models import PrimeFraction
from src.primes import is_prime, next_prime, primes_between


def _check_arguments(p_k: int, m: int) -> int:
    """Validate (p_k, m) and return p_{k+1}."""
    if p_k < 5 or not is_prime(p_k):
        raise DomainError(f"G(p_k, m) needs a prime p_k >= 5, got {p_k}")
    p_next = next_prime(p_k + 1)
    if not 0 <= m <= p_next - 3:
        raise DomainError(f"G({p_k}, m) needs 0 <= m <= {p_next - 3}, got {m}")
    return p_next


def g_bounds(p_k: int, m: int) -> Tuple[Fraction, Fraction]:
    """p_{k+1} / (p_{k+1} - m)* <= G(p_k, m) <= p_{k+1} / (p_{k+1} - m)."""
    p_next = _check_arguments(p_k, m)
    return Fraction(p_next, next_prime(p_next - m)), Fraction(p_next, p_next - m)


def _max_pairs(num_costs: Sequence[int], den_costs: Sequence[int], budget: int) -> int:
    """Largest t whose t cheapest numerators and t cheapest denominators fit the budget."""
    total = 0
    for t, (a, b) in enumerate(zip(num_costs, den_costs), start=1):
        total += a + b
        if total > budget:
            return t - 1
    return min(len(num_costs), len(den_costs))


def _knapsack(items: Sequence[Tuple[int, int]], count: int, budget: int, largest: bool) -> List[np.ndarray]:
    """rows[t][c]: best product of t distinct items with total cost <= c, 0 if none.

    ``largest`` selects max products, otherwise min products.
    """
    rows = [np.ones(budget + 1, dtype=object)]
    rows += [np.zeros(budget + 1, dtype=object) for _ in range(count)]
    for i, (prime, cost) in enumerate(items, start=1):
        if cost > budget:
            continue
        for t in range(min(count, i), 0, -1):
            candidate = prime * rows[t - 1][: budget + 1 - cost]
            current = rows[t][cost:]
            if largest:
                rows[t][cost:] = np.maximum(current, candidate)
            else:
                better = np.where(candidate == 0, current, np.minimum(current, candidate))
                rows[t][cost:] = np.where(current == 0, candidate, better)
    return rows


def _divisors_among(value: int, primes: Sequence[int]) -> Tuple[int, ...]:
    found = tuple(p for p in primes if value % p == 0)
    check = 1
    for p in found:
        check *= p
    if check != value:
        raise InvariantError(f"{value} is not a product of the candidate primes")
    return found


def g_combinatorial(p_k: int, m: int, enforce_cap: bool = True) -> PrimeFraction:
    """G(p_k, m) by an exact knapsack on shifted costs.

    A numerator prime Q costs Q - p_k and a denominator prime q costs
    p_k - q; with equal counts these add up to sum (Q_i - q_i). All costs
    are even, so the budget is counted in steps of two.
    """
    p_next = _check_arguments(p_k, m)
    if enforce_cap and m > HConfig.G_COMBINATORIAL_CAP:
        raise ResourceError(f"m={m} exceeds the knapsack cap {HConfig.G_COMBINATORIAL_CAP}; use the shifted search")
    if m < p_next - p_k:
        return PrimeFraction(method="combinatorial")

    budget = m // 2
    numerators = primes_between(p_next, p_k + m)
    denominators = primes_between(max(3, p_next - m), p_k)[::-1]
    num_items = [(Q, (Q - p_k) // 2) for Q in numerators]
    den_items = [(q, (p_k - q) // 2) for q in denominators]
    pairs = _max_pairs([c for _, c in num_items], [c for _, c in den_items], budget)
    if pairs == 0:
        return PrimeFraction(method="combinatorial")
    if 2 * (pairs + 1) * (budget + 1) > HConfig.MAX_TABLE_CELLS:
        raise ResourceError(f"knapsack for G({p_k}, {m}) needs more than {HConfig.MAX_TABLE_CELLS} cells")

    best_num = _knapsack(num_items, pairs, budget, largest=True)
    best_den = _knapsack(den_items, pairs, budget, largest=False)

    top, bottom = 1, 1
    for t in range(1, pairs + 1):
        num_row, den_row = best_num[t], best_den[t]
        for spent in range(budget + 1):
            a, b = num_row[spent], den_row[budget - spent]
            if a and b and a * bottom > top * b:
                top, bottom = a, b

    return PrimeFraction(
        Q=_divisors_among(top, numerators),
        q=_divisors_among(bottom, denominators[::-1]),
        method="combinatorial",
    )


def _combine(p_next: int, q: int, inner: PrimeFraction) -> Tuple[List[int], List[int]]:
    """(p_{k+1} / q) * inner as prime lists with shared primes cancelled."""
    top = list(inner.Q) + [p_next]
    bottom = list(inner.q) + [q]
    for p in set(top) & set(bottom):
        top.remove(p)
        bottom.remove(p)
    return sorted(top), sorted(bottom)


def g_fast(p_k: int, m: int, delta_cap: int = None) -> PrimeFraction:
    """G(p_k, m) for large m via the smallest admissible even shift delta.

    delta must make p_{k+1} - m + delta prime, satisfy 9 delta < 2m and
    G(p_{k+1}, delta) >= 1 + delta / p_{k+1}. Then G(p_k, m) is the max of
    (p_{k+1} / q) G(p_{k+1}, m - p_{k+1} + q) over primes q in
    [p_{k+1} - m, q_hat].
    """
    p_next = _check_arguments(p_k, m)
    m -= m % 2
    if p_k % 2 == 0:
        raise DomainError("the shifted search needs an odd p_k")
    if m < p_next - p_k:
        raise DomainError(f"the shifted search needs m >= {p_next - p_k}, got {m}")
    delta_cap = HConfig.DELTA_CAP if delta_cap is None else delta_cap

    inner: Dict[int, PrimeFraction] = {}

    def inner_g(arg: int) -> PrimeFraction:
        if arg not in inner:
            inner[arg] = g_combinatorial(p_next, arg)
        return inner[arg]

    low = p_next - m
    delta = None
    for shift in range(0, delta_cap + 1, 2):
        if not is_prime(low + shift):
            continue
        if 9 * shift >= 2 * m:
            break
        base = inner_g(shift)
        # G(p_{k+1}, delta) >= 1 + delta / p_{k+1}
        if base.numerator_value * p_next >= (p_next + shift) * base.denominator_value:
            delta = shift
            break
    if delta is None:
        raise DeltaSearchError(f"no admissible shift below {delta_cap} for G({p_k}, {m})")

    if delta == 0:
        return PrimeFraction(Q=(p_next,), q=(low,), method="fast", delta=0, inner_evaluations=0)

    p_after = next_prime(p_next + 1)
    q_hat = (2 * p_next * p_after * (low + delta)) // ((p_next + delta) * (2 * p_next - 3 * delta))

    top, bottom, winner = 1, 1, None
    candidates = primes_between(low, q_hat)
    for q in candidates:
        value = inner_g(m - p_next + q)
        a = p_next * value.numerator_value
        b = q * value.denominator_value
        if winner is None or a * bottom > top * b:
            top, bottom, winner = a, b, (q, value)

    Q, qs = _combine(p_next, *winner)
    return PrimeFraction(Q=Q, q=qs, method="fast", delta=delta, inner_evaluations=len(candidates))


def g(p_k: int, m: int, delta_cap: int = None) -> PrimeFraction:
    """G(p_k, m), routing by size of m after G(p_k, 2m + 1) = G(p_k, 2m)."""
    start = time.monotonic()
    p_next = _check_arguments(p_k, m)
    m -= m % 2

    if m < p_next - p_k:
        result = PrimeFraction(method="trivial")
    elif m <= HConfig.G_DIRECT_MAX_M:
        result = g_combinatorial(p_k, m)
    else:
        try:
            result = g_fast(p_k, m, delta_cap)
        except DeltaSearchError:
            result = g_combinatorial(p_k, m, enforce_cap=False)

    result.check_chain(p_k, p_next, m)
    logger.log(GEvaluationEvent(
        p_k=p_k,
        m=m,
        method=result.method,
        s=result.s,
        delta=result.delta,
        inner_evaluations=result.inner_evaluations,
        seconds=round(time.monotonic() - start, 6),
    ), "g")
    return result
