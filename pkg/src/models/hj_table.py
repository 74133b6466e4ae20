from bisect import bisect_right
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from src.errors import DomainError


@dataclass(eq=False)
class HTable:
    """Dense table of h_j(n, alphabet) for 0 <= n <= nmax.

    ``rows[j][n]`` is an exact integer, 0 where no j alphabet primes sum
    to at most n; ``rows[0]`` is all ones. ``sigma`` lists the sums of the
    first primes of the full sequence, used for k(n).
    """
    nmax: int
    alphabet: Tuple[int, ...]
    rows: List[np.ndarray]
    full: bool
    sigma: Tuple[int, ...]

    @property
    def jmax(self) -> int:
        return len(self.rows) - 1

    def value(self, j: int, n: int) -> int:
        """h_j(n); 0 means undefined."""
        if not 0 <= n <= self.nmax:
            raise DomainError(f"n={n} outside table range [0, {self.nmax}]")
        if j < 0 or j > self.jmax:
            return 0
        return int(self.rows[j][n])

    def k_of(self, n: int) -> int:
        """k(n): the largest k with sigma_k <= n."""
        if n < 0:
            raise DomainError(f"k(n) needs n >= 0, got {n}")
        if n >= self.sigma[-1]:
            raise DomainError(f"n={n} beyond the stored prime sums")
        return bisect_right(self.sigma, n) - 1

    def column(self, n: int) -> List[int]:
        """[h_1(n), h_2(n), ...] up to the last defined entry."""
        values = [self.value(j, n) for j in range(1, self.jmax + 1)]
        while values and values[-1] == 0:
            values.pop()
        return values

    def format_table(self, nmin: int = 2, separator: str = None) -> str:
        """Rows n, columns j, blank where undefined.

        With a separator (e.g. a tab) the cells are joined verbatim;
        otherwise they are right-aligned.
        """
        body = [(n, self.column(n)) for n in range(nmin, self.nmax + 1)]
        ncols = max((len(c) for _, c in body), default=0)
        header = ["j="] + [str(j) for j in range(1, ncols + 1)]
        lines = [[str(n)] + [str(v) for v in c] + [""] * (ncols - len(c)) for n, c in body]
        if separator is not None:
            return "\n".join(separator.join(cells) for cells in [header] + lines)
        widths = [max(len(row[i]) for row in [header] + lines) for i in range(ncols + 1)]
        return "\n".join(
            " ".join(cell.rjust(w) for cell, w in zip(cells, widths)).rstrip()
            for cells in [header] + lines
        )
