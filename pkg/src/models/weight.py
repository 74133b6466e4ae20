from dataclasses import dataclass
from enum import Enum

import numpy as np

from src.errors import DomainError


class WeightId(str, Enum):
    UNIT = "unit"
    IDENTITY = "identity"


@dataclass(frozen=True)
class Weight:
    """A completely multiplicative integer weight f with summatory F.

    ``unit`` counts primes, ``identity`` sums them.
    """
    id: WeightId

    def f(self, n: int) -> int:
        return 1 if self.id is WeightId.UNIT else n

    def summatory(self, u: int) -> int:
        """F(u) = sum of f(n) for 1 <= n <= u."""
        if u < 0:
            raise DomainError(f"summatory needs u >= 0, got {u}")
        if self.id is WeightId.UNIT:
            return u
        return u * (u + 1) // 2

    def on_array(self, values: np.ndarray) -> np.ndarray:
        """f applied elementwise; values stay in their dtype."""
        if self.id is WeightId.UNIT:
            return np.ones_like(values)
        return values

    @property
    def name(self) -> str:
        return self.id.value

    @classmethod
    def from_name(cls, name: str) -> "Weight":
        try:
            return WEIGHTS[WeightId(name)]
        except ValueError:
            raise DomainError(f"unknown weight {name!r}; expected 'unit' or 'identity'")


UNIT = Weight(WeightId.UNIT)
IDENTITY = Weight(WeightId.IDENTITY)
WEIGHTS = {WeightId.UNIT: UNIT, WeightId.IDENTITY: IDENTITY}
