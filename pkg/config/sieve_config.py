"""
Sizing for the segmented sieves and the primality test
"""

import os


class SieveConfig:
    # Width of one segment; stored one byte per odd residue
    BLOCK_SIZE = 1 << 21
    MEMORY_BUDGET_BYTES = int(os.environ.get("HPRIMES_MEMORY_BUDGET", str(1 << 30)))
    # Segments whose square root exceeds this are pre-sieved and then
    # confirmed with the primality test
    MAX_BASE_SIEVE = 10**6
    # Strong probable-prime bases 2..41 are exact below this bound
    DETERMINISTIC_LIMIT = 3317044064679887385961981
    PRIMALITY_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
