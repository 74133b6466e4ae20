"""Brute-force evaluations of every quantity the engine assembles.

Each function follows its defining sum literally; they are the oracles of
the test battery and only practical for x up to a few times 10^4.
"""

from __future__ import annotations

from functools import lru_cache
from math import isqrt
from typing import Dict, List

from src.models import Weight
from src.primes import build_base_tables, small_primes
from src.prime_sum.leaves import iroot


def _factor_table(limit: int):
    tables = build_base_tables(max(limit, 2), [])
    return tables.mu.tolist(), tables.lpf.tolist()


def phi_direct(u: int, b: int, weight: Weight) -> int:
    """Sum of f(n) over n <= u free of the first b primes."""
    primes = small_primes(max(u, 2)).tolist()
    while len(primes) < b:
        primes = small_primes(2 * primes[-1]).tolist()
    sieving = primes[:b]
    return sum(weight.f(n) for n in range(1, u + 1) if all(n % p for p in sieving))


def phi_recursive(u: int, b: int, weight: Weight) -> int:
    """Phi(u, b) = Phi(u, b - 1) - f(p_b) Phi(u / p_b, b - 1), Phi(u, 0) = F(u)."""
    primes = small_primes(64 + 16 * b).tolist()

    @lru_cache(maxsize=None)
    def phi(v: int, c: int) -> int:
        if c == 0 or v == 0:
            return weight.summatory(v)
        p = primes[c - 1]
        return phi(v, c - 1) - weight.f(p) * phi(v // p, c - 1)

    return phi(u, b)


def full_expansion(x: int, y: int, weight: Weight) -> int:
    """Phi(x, pi(y)) = sum over n <= x with P+(n) <= y of mu(n) f(n) F(x/n)."""
    mu, lpf = _factor_table(x)
    total = 0
    for n in range(1, x + 1):
        if mu[n] == 0:
            continue
        largest, m = 1, n
        while m > 1:
            largest = max(largest, lpf[m])
            m //= lpf[m]
        if largest <= y:
            total += mu[n] * weight.f(n) * weight.summatory(x // n)
    return total


def p2_direct(x: int, y: int, weight: Weight) -> int:
    """Sum of f(pq) over primes y < p <= q with pq <= x."""
    primes = [p for p in small_primes(max(x // max(y + 1, 2), 2)).tolist() if p > y]
    total = 0
    for i, p in enumerate(primes):
        if p * p > x:
            break
        for q in primes[i:]:
            if p * q > x:
                break
            total += weight.f(p) * weight.f(q)
    return total


def leaf_split_direct(x: int, y: int, weight: Weight) -> Dict[str, int]:
    """S1, S2, S3 by enumerating special leaves n = m p and sieving Phi directly,
    plus U, V1, W1..W5 from their defining double sums."""
    primes = small_primes(max(x, 2)).tolist()
    pif_table = [0] * (x + 1)
    it = 0
    running = 0
    for t in range(x + 1):
        while it < len(primes) and primes[it] <= t:
            running += weight.f(primes[it])
            it += 1
        pif_table[t] = running
    index = {p: i + 1 for i, p in enumerate(primes)}
    mu, lpf = _factor_table(max(y, 2))

    @lru_cache(maxsize=None)
    def phi(v: int, c: int) -> int:
        if c == 0 or v == 0:
            return weight.summatory(v)
        p = primes[c - 1]
        return phi(v, c - 1) - weight.f(p) * phi(v // p, c - 1)

    x3, x4 = iroot(x, 3), iroot(x, 4)
    out = {key: 0 for key in ("S1", "S2", "S3", "U", "V1", "W1", "W2", "W3", "W4", "W5")}
    for p in (v for v in primes if v <= y):
        for m in range(2, y + 1):
            if mu[m] == 0 or lpf[m] <= p or m * p <= y:
                continue
            term = -weight.f(p) * mu[m] * weight.f(m) * phi(x // (m * p), index[p] - 1)
            key = "S3" if p <= x4 else ("S2" if p <= x3 else "S1")
            out[key] += term

    pif = pif_table.__getitem__
    for p in (v for v in primes if x4 < v <= x3):
        fp = weight.f(p)
        for q in (v for v in primes if p < v <= y):
            fq = weight.f(q)
            if q > x // (p * p):
                out["U"] += fp * fq
                continue
            out["V1"] += fp * fq * (1 - pif(p - 1))
            u = pif(x // (p * q))
            if p * p * y <= x:
                if p * y * y <= x:
                    out["W1"] += fp * fq * u
                elif q * q * p <= x:
                    out["W2"] += fp * fq * u
                else:
                    out["W3"] += fp * fq * u
            elif q * q * p <= x:
                out["W4"] += fp * fq * u
            else:
                out["W5"] += fp * fq * u
    return out


def quotient_sum_direct(z: int, u: int, weight: Weight) -> int:
    """sum over primes sqrt(z) < q <= u of f(q) pi_f(z/q), one q at a time."""
    primes: List[int] = small_primes(max(z, 2)).tolist()
    root = isqrt(z)
    total = 0
    for q in primes:
        if root < q <= u:
            total += weight.f(q) * sum(weight.f(r) for r in primes if r <= z // q)
    return total
