from dataclasses import dataclass
from typing import Optional

from src.models.base_model import BaseModel


@dataclass
class KLocation(BaseModel):
    """The unique k with sigma_k <= n < sigma_{k+1}, plus p_k and p_{k+1}."""
    n: int
    p_k: int
    sigma_k: int
    p_next: int
    k: Optional[int] = None

    @property
    def n_prime(self) -> int:
        """n' = n - sigma_k, always in [0, p_{k+1})."""
        return self.n - self.sigma_k
