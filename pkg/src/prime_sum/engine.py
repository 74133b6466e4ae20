"""pi_f(x) = Phi(x, a) + pi_f(y) - 1 - P2(x, a), with a = pi(y)."""

from __future__ import annotations

import time
from math import isqrt
from typing import Optional

import numpy as np

from config import PifConfig
from src.errors import CapacityError, DomainError
from src.logger import PifRunEvent, logger
from src.models import PifRun, PrimeTables, Weight
from src.primes import build_base_tables, iter_prime_blocks, weighted_total
from src.prime_sum.leaves import (
    iroot,
    ordinary_leaves,
    s1_leaves,
    s2_parts,
    s3_leaves,
    summatory,
)
from src.prime_sum.segments import AscendingPrimeSum, exact_dot, exact_sum, prefix_weights


def choose_y(x: int, factor: Optional[float] = None) -> int:
    """factor * x^(1/3), clamped to [x^(1/3), sqrt(x)]."""
    factor = PifConfig.Y_FACTOR if factor is None else factor
    lo, hi = iroot(x, 3), isqrt(x)
    return max(lo, min(hi, int(factor * lo)))


def check_y(x: int, y: int) -> None:
    if not iroot(x, 3) <= y <= isqrt(x):
        raise DomainError(f"y={y} must lie in [x^(1/3), sqrt(x)] for x={x}")


def p2(x: int, y: int, weight: Weight, tables: PrimeTables, block_size: int = None) -> int:
    """P2(x, a) = sum over y < p <= sqrt(x) of f(p) (pi_f(x/p) - pi_f(p - 1)).

    An auxiliary sieve walks ]y, sqrt(x)] downward while the main sieve
    walks ]sqrt(x), x/y] upward, each query x/p being no smaller than the
    last.
    """
    root = isqrt(x)
    if root <= y:
        return 0
    pif_y = tables.pif_of(y, weight)
    pif_root = pif_y + sum(weighted_total(block, weight) for _, _, block in iter_prime_blocks(y + 1, root, block_size))

    main = AscendingPrimeSum(root + 1, pif_root, weight, block_size)
    running = pif_root
    total = 0
    for _, _, block in iter_prime_blocks(y + 1, root, block_size, descending=True):
        running -= weighted_total(block, weight)
        fps = weight.on_array(block)
        # pi_f(p - 1) = running + (f of the block primes below p)
        below = prefix_weights(block, weight) - fps
        total -= running * exact_sum(fps) + exact_dot(fps, below)
        total += main.weighted_sum((np.int64(x) // block)[::-1], fps[::-1])
    return total


def special_leaves(x: int, y: int, weight: Weight, tables: PrimeTables, run: PifRun = None) -> int:
    """S = S1 + S2 + S3; fills the matching fields of ``run`` when given."""
    run = run or PifRun(x=x, y=y, a=tables.pi_of(y), weight=weight.name)
    run.S1 = s1_leaves(x, y, weight, tables)
    parts = s2_parts(x, y, weight, tables)
    run.U, run.V1 = parts.U, parts.V1
    run.W1, run.W2, run.W3, run.W4, run.W5 = parts.W1, parts.W2, parts.W3, parts.W4, parts.W5
    run.S3 = s3_leaves(x, y, weight, tables)
    return run.S


def pif_run(x: int, weight: Weight, y: Optional[int] = None, tables: Optional[PrimeTables] = None) -> PifRun:
    """Evaluate every piece of pi_f(x) and return them."""
    if x < 1:
        raise DomainError(f"pi_f(x) needs x >= 1, got {x}")
    if x > PifConfig.MAX_X:
        raise CapacityError(f"x={x} exceeds the supported bound {PifConfig.MAX_X}")
    summatory(x, weight)
    y = choose_y(x) if y is None else y
    check_y(x, y)
    if tables is None or tables.y < y or not tables.has_weight(weight):
        tables = build_base_tables(max(y, 2), [weight])

    run = PifRun(x=x, y=y, a=tables.pi_of(y), weight=weight.name, pif_y=tables.pif_of(y, weight))
    run.S0 = ordinary_leaves(x, y, weight, tables)
    special_leaves(x, y, weight, tables, run)
    run.P2 = p2(x, y, weight, tables)
    return run


def pif(x: int, weight: Weight, y: Optional[int] = None, tables: Optional[PrimeTables] = None) -> int:
    """pi_f(x), the sum of f(p) over primes p <= x."""
    if x < 0:
        raise DomainError(f"pi_f(x) needs x >= 0, got {x}")
    if x < 2:
        return 0
    if tables is not None and x <= tables.y and tables.has_weight(weight):
        return tables.pif_of(x, weight)

    start = time.monotonic()
    run = pif_run(x, weight, y=y, tables=tables)
    logger.log(PifRunEvent(
        x=x,
        weight=weight.name,
        y=run.y,
        a=run.a,
        value=run.value,
        seconds=round(time.monotonic() - start, 6),
    ), "pif")
    return run.value
