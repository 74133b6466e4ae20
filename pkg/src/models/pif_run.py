from dataclasses import dataclass

from src.models.base_model import BaseModel


@dataclass
class PifRun(BaseModel):
    """Every accumulator of one pi_f(x) evaluation.

    pi_f(x) = phi + pi_f(y) - 1 - P2 with phi = S0 + S,
    S = S1 + S2 + S3, S2 = U + V, V = V1 + V2, V2 = W1 + ... + W5.
    """
    x: int
    y: int
    a: int
    weight: str
    pif_y: int = 0
    S0: int = 0
    S1: int = 0
    S3: int = 0
    U: int = 0
    V1: int = 0
    W1: int = 0
    W2: int = 0
    W3: int = 0
    W4: int = 0
    W5: int = 0
    P2: int = 0

    @property
    def V2(self) -> int:
        return self.W1 + self.W2 + self.W3 + self.W4 + self.W5

    @property
    def V(self) -> int:
        return self.V1 + self.V2

    @property
    def S2(self) -> int:
        return self.U + self.V

    @property
    def S(self) -> int:
        return self.S1 + self.S2 + self.S3

    @property
    def phi(self) -> int:
        """Phi(x, a)."""
        return self.S0 + self.S

    @property
    def value(self) -> int:
        return self.phi + self.pif_y - 1 - self.P2
