"""Logarithmic integral, its inverse, and the conditional RH window for pi_id.

All arithmetic runs in mpmath at ``AnalyticConfig.PRECISION_DIGITS``
decimal digits; results are returned as ``mpmath.mpf``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import mpmath

from config import AnalyticConfig
from src.errors import DomainError, NumericError

# Li(SOLDNER) = 0; Li is increasing on (1, inf) and negative below it
SOLDNER = "1.451369234883381050283968485892027449493"


@dataclass(frozen=True)
class LiConfig:
    relative_tolerance: float = field(default_factory=lambda: AnalyticConfig.RELATIVE_TOLERANCE)
    max_newton_iterations: int = field(default_factory=lambda: AnalyticConfig.MAX_NEWTON_ITERATIONS)

    def __post_init__(self):
        if not 0 < self.relative_tolerance <= 1e-6:
            raise DomainError(f"tolerance must lie in (0, 1e-6], got {self.relative_tolerance}")
        if self.max_newton_iterations < 8:
            raise DomainError(f"need at least 8 Newton iterations, got {self.max_newton_iterations}")


def _li(x: mpmath.mpf, tolerance: float) -> mpmath.mpf:
    """gamma + log log x + sum (log x)^n / (n n!), summed until terms fall below tolerance."""
    log_x = mpmath.log(x)
    head = mpmath.euler + mpmath.log(log_x)
    series = mpmath.mpf(0)
    power = mpmath.mpf(1)  # (log x)^n / n!
    n = 0
    while True:
        n += 1
        power *= log_x / n
        term = power / n
        series += term
        # terms only shrink once n exceeds log x
        if n > log_x and term <= tolerance * max(abs(head + series), mpmath.mpf(1)):
            return head + series


def li(x, config: LiConfig = None) -> mpmath.mpf:
    """Li(x) for x > 1."""
    config = config or LiConfig()
    with mpmath.workdps(AnalyticConfig.PRECISION_DIGITS):
        x = mpmath.mpf(x)
        if x <= 1:
            raise DomainError(f"Li(x) needs x > 1, got {x}")
        return _li(x, config.relative_tolerance / 10)


def li_inverse(z, config: LiConfig = None) -> mpmath.mpf:
    """x with Li(x) = z, by Newton steps kept inside a shrinking bracket."""
    config = config or LiConfig()
    tol = config.relative_tolerance
    with mpmath.workdps(AnalyticConfig.PRECISION_DIGITS):
        z = mpmath.mpf(z)
        if z < 1:
            raise DomainError(f"Li^-1(z) needs z >= 1, got {z}")
        lo = mpmath.mpf(SOLDNER)
        x = max(z * mpmath.log(z), mpmath.mpf(2))
        hi = 2 * x
        while _li(hi, tol / 10) < z:
            lo, hi = hi, 2 * hi
        if not lo < x < hi:
            x = (lo + hi) / 2

        for _ in range(config.max_newton_iterations):
            err = _li(x, tol / 10) - z
            if abs(err) <= tol * z:
                return x
            if err > 0:
                hi = x
            else:
                lo = x
            step = x - err * mpmath.log(x)
            # Li'(x) = 1/log x is tiny, so a raw step can leave the bracket
            x = step if lo < step < hi else (lo + hi) / 2
        raise NumericError(f"Li^-1({z}) did not converge in {config.max_newton_iterations} iterations")


def rh_gap_bound(x) -> mpmath.mpf:
    """(5 / (24 pi)) x^(3/2) log x, the RH bound on |pi_id(x) - Li(x^2)| for x >= 41."""
    with mpmath.workdps(AnalyticConfig.PRECISION_DIGITS):
        x = mpmath.mpf(x)
        if x < 41:
            raise DomainError(f"the bound is stated for x >= 41, got {x}")
        return 5 / (24 * mpmath.pi) * x ** mpmath.mpf(1.5) * mpmath.log(x)
