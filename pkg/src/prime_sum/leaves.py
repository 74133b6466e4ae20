"""Ordinary and special leaves of the truncated Phi recursion.

With x^(1/3) <= y <= sqrt(x) and a = pi(y),

    Phi(x, a) = S0 + S,   S0 = sum_{n <= y} mu(n) f(n) F(x/n),

and the special leaves n = m p (p = P-(n), m <= y < n) split by p into
S3 (p <= x^(1/4)), S2 (x^(1/4) < p <= x^(1/3)) and S1 (p > x^(1/3)).
S2 = U + V1 + W1 + ... + W5.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import Dict, List, Tuple

import gmpy2
import numpy as np

from config import PifConfig
from src.errors import CapacityError, DomainError
from src.models import PrimeTables, Weight, WeightId
from src.prime_sum.phi_sieve import PhiSieve
from src.prime_sum.segments import exact_dot, exact_sum, prefix_weights
from src.primes import iter_prime_blocks, weighted_total


def iroot(x: int, k: int) -> int:
    """floor(x^(1/k))."""
    return int(gmpy2.iroot(x, k)[0])


def summatory(u: int, weight: Weight) -> int:
    """F(u), refusing values past the 128-bit capacity."""
    value = weight.summatory(u)
    if value >= 2**PifConfig.CAPACITY_BITS:
        raise CapacityError(f"F({u}) for the {weight.name} weight exceeds {PifConfig.CAPACITY_BITS} bits")
    return value


def ordinary_leaves(x: int, y: int, weight: Weight, tables: PrimeTables) -> int:
    """S0 = sum over n <= y of mu(n) f(n) F(x/n)."""
    summatory(x, weight)
    mu = tables.mu
    total = 0
    for n in np.flatnonzero(mu[: y + 1]).tolist():
        total += int(mu[n]) * weight.f(n) * weight.summatory(x // n)
    return total


def grouped_quotient_sum(z: int, u: int, weight: Weight, tables: PrimeTables) -> int:
    """sum over primes sqrt(z) < q <= u of f(q) pi_f(z/q).

    Consecutive q sharing the same pi(z/q) are summed in one step.
    """
    if z < 1:
        raise DomainError(f"grouped sum needs z >= 1, got {z}")
    root = isqrt(z)
    if u <= root:
        return 0
    if u > tables.y or root > tables.y:
        raise DomainError(f"grouped sum for z={z}, u={u} needs tables beyond y={tables.y}")
    pi = tables.pi
    prime = tables.prime
    piftab = tables.piftab[weight.id]

    total = 0
    imin = int(pi[root]) + 1
    pi_u = int(pi[u])
    while imin <= pi_u:
        q = int(prime[imin])
        s = int(pi[z // q])
        imax = int(pi[min(z // int(prime[s]), u)])
        total += (int(piftab[imax]) - int(piftab[imin - 1])) * int(piftab[s])
        imin = imax + 1
    return total


def s1_leaves(x: int, y: int, weight: Weight, tables: PrimeTables) -> int:
    """S1: p in (x^(1/3), y], where Phi(x/(pq), pi(p) - 1) = 1."""
    piftab = tables.piftab[weight.id]
    pif_y = tables.pif_of(y, weight)
    total = 0
    for k in range(tables.pi_of(iroot(x, 3)) + 1, tables.pi_of(y) + 1):
        fp = int(piftab[k]) - int(piftab[k - 1])
        total += fp * (pif_y - int(piftab[k]))
    return total


@dataclass
class S2Parts:
    U: int = 0
    V1: int = 0
    W1: int = 0
    W2: int = 0
    W3: int = 0
    W4: int = 0
    W5: int = 0
    # ("W1" | "W2", f(p), p, j_lo, j_hi): q = prime[j_lo..j_hi] with pi_f(x/pq) above the table
    deferred: List[Tuple[str, int, int, int, int]] = field(default_factory=list)


def _quotient_pif_sum(x: int, p: int, j_lo: int, j_hi: int, weight: Weight, tables: PrimeTables) -> int:
    """sum of f(q) pi_f(x/(pq)) over q = prime[j_lo..j_hi], every x/(pq) <= y."""
    if j_hi < j_lo:
        return 0
    q = tables.prime[j_lo: j_hi + 1]
    u = np.int64(x) // (p * q)
    return exact_dot(weight.on_array(q), tables.piftab[weight.id][tables.pi[u]])


def s2_parts(x: int, y: int, weight: Weight, tables: PrimeTables, block_size: int = None) -> S2Parts:
    """S2 = U + V1 + W1 + ... + W5 for primes p in (x^(1/4), x^(1/3)].

    Only q prime with p < q <= y contribute. U collects q > x/p^2 where
    the Phi factor is 1; the rest has Phi = 1 + pi_f(x/pq) - pi_f(p - 1),
    giving V1 and V2 = W1 + ... + W5 split by the ranges of p and q.
    """
    parts = S2Parts()
    piftab = tables.piftab[weight.id]
    prime = tables.prime
    pif_y = tables.pif_of(y, weight)
    a = tables.pi_of(y)
    # x/(pq) <= y exactly when q > (x/(y+1))/p
    cut = x // (y + 1)

    for k in range(tables.pi_of(iroot(x, 4)) + 1, tables.pi_of(iroot(x, 3)) + 1):
        p = int(prime[k])
        fp = weight.f(p)
        pif_p = int(piftab[k])
        x_pp = x // (p * p)
        qmax = min(y, x_pp)

        lower = max(p, x_pp)
        if lower < y:
            parts.U += fp * (pif_y - tables.pif_of(lower, weight))
        if qmax <= p:
            continue

        parts.V1 += fp * (1 - int(piftab[k - 1])) * (tables.pif_of(qmax, weight) - pif_p)

        z = x // p
        root = isqrt(z)
        if p * p * y <= x:
            if p * y * y <= x:
                # W1: q in (p, y]
                tag, j_hi = "W1", a
            else:
                # W2: q in (p, sqrt(x/p)]; W3: q in (sqrt(x/p), y]
                tag, j_hi = "W2", tables.pi_of(min(root, y))
                parts.W3 += fp * grouped_quotient_sum(z, y, weight, tables)
            j_split = min(tables.pi_of(min(cut // p, y)), j_hi)
            if j_split > k:
                parts.deferred.append((tag, fp, p, k + 1, j_split))
            in_table = _quotient_pif_sum(x, p, max(k, j_split) + 1, j_hi, weight, tables)
            setattr(parts, tag, getattr(parts, tag) + fp * in_table)
        else:
            # W4: q in (p, sqrt(x/p)]; W5: q in (sqrt(x/p), x/p^2]
            parts.W4 += fp * _quotient_pif_sum(x, p, k + 1, tables.pi_of(min(root, qmax)), weight, tables)
            parts.W5 += fp * grouped_quotient_sum(z, qmax, weight, tables)

    if parts.deferred:
        _resolve_deferred(parts, x, y, pif_y, weight, tables, block_size)
    return parts


def _resolve_deferred(parts: S2Parts, x: int, y: int, pif_y: int, weight: Weight, tables: PrimeTables,
                      block_size: int = None) -> None:
    """pi_f(x/pq) above y for every deferred (p, q range), by one ascending pass of block sieves."""
    jobs = parts.deferred
    tags = [job[0] for job in jobs]
    fps = [job[1] for job in jobs]
    ps = np.array([job[2] for job in jobs], dtype=np.int64)
    j_lo = np.array([job[3] for job in jobs], dtype=np.int64)
    j_hi = np.array([job[4] for job in jobs], dtype=np.int64)
    prime = tables.prime
    x64 = np.int64(x)
    top = int((x64 // (ps * prime[j_lo])).max())

    sums: Dict[str, int] = {"W1": 0, "W2": 0}
    base = pif_y
    for lo, hi, primes in iter_prime_blocks(y + 1, top, block_size):
        # q with lo <= x/(pq) <= hi
        first = np.maximum(j_lo, np.searchsorted(prime, x64 // (hi + 1) // ps + 1, side="left"))
        last = np.minimum(j_hi, np.searchsorted(prime, x64 // lo // ps, side="right") - 1)
        running = prefix_weights(primes, weight)
        running = np.concatenate([np.zeros(1, dtype=running.dtype), running])
        for i in np.flatnonzero(last >= first).tolist():
            q = prime[first[i]: last[i] + 1]
            fq = weight.on_array(q)
            values = running[np.searchsorted(primes, x64 // (ps[i] * q), side="right")]
            sums[tags[i]] += fps[i] * (base * exact_sum(fq) + exact_dot(fq, values))
        base += weighted_total(primes, weight)
    parts.W1 += sums["W1"]
    parts.W2 += sums["W2"]
    parts.deferred = []


def _squarefree_from_two(y: int, tables: PrimeTables) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Ascending squarefree m in [2, y] with lpf(m) and mu(m)."""
    m = np.arange(2, y + 1, dtype=np.int64)
    m = m[tables.mu[2: y + 1] != 0]
    return m, tables.lpf[m], tables.mu[m].astype(np.int64)


def s3_leaves(x: int, y: int, weight: Weight, tables: PrimeTables, block_size: int = None) -> int:
    """S3: p <= x^(1/4), each Phi(x/(mp), b - 1) read from a block of the partial sieve of [1, x/y].

    The leaves of p_b inside a block [lo, hi] are the squarefree m with
    lpf(m) > p_b, m > y/p_b and lo <= x/(m p_b) <= hi.
    """
    b3 = tables.pi_of(iroot(x, 4))
    if b3 == 0:
        return 0
    limit = x // y
    block_size = block_size or PifConfig.PHI_BLOCK_SIZE
    if weight.id is WeightId.IDENTITY:
        block_size = min(block_size, PifConfig.MAX_X // limit)
    block_size = min(block_size, limit)

    m_all, lpf, mu = _squarefree_from_two(y, tables)
    signed = mu * weight.on_array(m_all)
    ps = tables.prime[1: b3 + 1].astype(np.int64)
    fps = [weight.f(p) for p in ps.tolist()]
    m_floor = np.searchsorted(m_all, y // ps, side="right")
    x64 = np.int64(x)
    # phi_base[b - 1] = Phi(lo - 1, b - 1) for the current block start lo
    phi_base = [0] * b3
    total = 0
    for lo in range(1, limit + 1, block_size):
        hi = min(lo + block_size - 1, limit)
        sieve = PhiSieve(lo, hi, weight)
        remaining = sieve.total()
        starts = np.maximum(m_floor, np.searchsorted(m_all, x64 // (ps * (hi + 1)), side="right")).tolist()
        ends = np.searchsorted(m_all, x64 // (ps * lo), side="right").tolist()
        for b in range(1, b3 + 1):
            p = int(ps[b - 1])
            i0, i1 = starts[b - 1], ends[b - 1]
            if i1 > i0:
                keep = lpf[i0:i1] > p
                c = signed[i0:i1][keep]
                if len(c):
                    found = sieve.prefix_many(x64 // (m_all[i0:i1][keep] * p))
                    total -= fps[b - 1] * (phi_base[b - 1] * exact_sum(c) + exact_dot(c, found))
            phi_base[b - 1] += remaining
            if b < b3:
                remaining -= sieve.sieve_out(p)
    return total
