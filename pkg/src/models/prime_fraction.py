from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Optional, Tuple

from src.errors import DomainError, InvariantError
from src.models.base_model import BaseModel


@dataclass
class PrimeFraction(BaseModel):
    """G(p_k, m) as Q_1...Q_s / (q_1...q_s).

    Both lists are ascending; an empty pair encodes G = 1. ``method``,
    ``delta`` and ``inner_evaluations`` record how the value was found and
    take no part in equality.
    """
    Q: Tuple[int, ...] = ()
    q: Tuple[int, ...] = ()
    method: str = field(default="exact", compare=False)
    delta: Optional[int] = field(default=None, compare=False)
    inner_evaluations: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        self.Q = tuple(int(v) for v in self.Q)
        self.q = tuple(int(v) for v in self.q)
        self.validate()

    def validate(self) -> None:
        if len(self.Q) != len(self.q):
            raise DomainError(f"numerator and denominator sizes differ: {self.Q} / {self.q}")
        for name, primes in (("Q", self.Q), ("q", self.q)):
            if any(a >= b for a, b in zip(primes, primes[1:])):
                raise DomainError(f"{name} must be strictly ascending, got {primes}")
        if set(self.Q) & set(self.q):
            raise DomainError(f"numerator and denominator share primes: {self.Q} / {self.q}")

    @property
    def s(self) -> int:
        return len(self.Q)

    @property
    def numerator_value(self) -> int:
        return prod(self.Q)

    @property
    def denominator_value(self) -> int:
        return prod(self.q)

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator_value, self.denominator_value)

    @property
    def ell(self) -> int:
        """Sum of (Q_i - q_i)."""
        return sum(self.Q) - sum(self.q)

    def exceeds(self, other: "PrimeFraction") -> bool:
        """Strict comparison of values by cross-multiplication."""
        return self.numerator_value * other.denominator_value > other.numerator_value * self.denominator_value

    def check_chain(self, p_k: int, p_next: int, m: int) -> None:
        """Raise unless 3 <= q_s < ... < q_1 <= p_k < p_next <= Q_1 < ... and ell <= m."""
        if self.q and (self.q[0] < 3 or self.q[-1] > p_k):
            raise InvariantError(f"denominator {self.q} outside [3, {p_k}]")
        if self.Q and self.Q[0] < p_next:
            raise InvariantError(f"numerator {self.Q} starts below {p_next}")
        if self.ell > m:
            raise InvariantError(f"cost {self.ell} exceeds budget {m}")

    def __str__(self) -> str:
        if not self.Q:
            return "1"
        return f"{' * '.join(map(str, self.Q))} / ({' * '.join(map(str, self.q))})"
