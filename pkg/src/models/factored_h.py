from dataclasses import dataclass, field
from typing import Optional, Tuple

from src.errors import DomainError
from src.models.base_model import BaseModel


@dataclass
class FactoredH(BaseModel):
    """h(n) written as N_b * prod(numerator) / prod(denominator).

    N_b is the primorial of ``base_prime`` (p_b, the b-th prime; p_0 = 1).
    Denominator primes divide N_b and numerator primes lie above p_b, so
    the value is squarefree.
    """
    n: int
    base_prime: int
    sigma_base: int
    base_index: Optional[int] = None
    numerator: Tuple[int, ...] = ()
    denominator: Tuple[int, ...] = ()
    route: str = field(default="", compare=False)
    # shift and inner G evaluations of the shifted search, when it ran
    delta: Optional[int] = field(default=None, compare=False)
    inner_evaluations: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        self.numerator = tuple(int(v) for v in self.numerator)
        self.denominator = tuple(int(v) for v in self.denominator)
        self.validate()

    def validate(self) -> None:
        if any(p <= self.base_prime for p in self.numerator):
            raise DomainError(f"numerator primes must exceed {self.base_prime}: {self.numerator}")
        if any(p > self.base_prime for p in self.denominator):
            raise DomainError(f"denominator primes must not exceed {self.base_prime}: {self.denominator}")
        for primes in (self.numerator, self.denominator):
            if any(a >= b for a, b in zip(primes, primes[1:])):
                raise DomainError(f"prime lists must be strictly ascending: {primes}")

    @property
    def ell(self) -> int:
        return self.sigma_base + sum(self.numerator) - sum(self.denominator)

    @property
    def largest_prime(self) -> int:
        """P+(h), assuming the base prime is not cancelled."""
        if self.numerator:
            return self.numerator[-1]
        if self.denominator and self.denominator[-1] == self.base_prime:
            raise DomainError("largest prime factor needs the previous prime of the base")
        return self.base_prime

    def to_dict(self):
        record = super().to_dict()
        record.pop("route", None)
        for key in ("delta", "inner_evaluations"):
            if record[key] is None:
                record.pop(key)
        record["ell"] = self._encode(self.ell)
        return record
