from dataclasses import dataclass, field
from typing import Dict

import numpy as np

from src.errors import DomainError
from src.models.weight import Weight, WeightId


@dataclass(frozen=True, eq=False)
class PrimeTables:
    """Primes, pi and weighted prime sums up to y.

    ``prime[0]`` is the sentinel 1, ``prime[k]`` the k-th prime,
    ``pi[t]`` = pi(t) for t <= y and ``piftab[w][k]`` = pi_f(prime[k]).
    ``mu`` and ``lpf`` hold the Moebius function and least prime factor
    for n <= y (lpf[1] is a sentinel larger than y).
    """
    y: int
    prime: np.ndarray
    pi: np.ndarray
    piftab: Dict[WeightId, np.ndarray]
    mu: np.ndarray = field(repr=False)
    lpf: np.ndarray = field(repr=False)

    def pi_of(self, t: int) -> int:
        if t < 0:
            return 0
        if t > self.y:
            raise DomainError(f"pi({t}) is beyond the table bound {self.y}")
        return int(self.pi[t])

    def pif_of(self, t: int, weight: Weight) -> int:
        """pi_f(t) for t <= y."""
        return int(self.piftab[weight.id][self.pi_of(t)])

    def sigma(self, k: int) -> int:
        """sigma_k, the sum of the first k primes."""
        return int(self.piftab[WeightId.IDENTITY][k])

    def has_weight(self, weight: Weight) -> bool:
        return weight.id in self.piftab
