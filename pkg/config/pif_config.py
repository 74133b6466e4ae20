"""
Tuning for the prime-sum engine
"""


class PifConfig:
    # y = Y_FACTOR * x^(1/3), clamped to [x^(1/3), sqrt(x)]
    Y_FACTOR = 3.0
    # identity-weight blocks shrink so block * (x / y) stays below 2^63
    PHI_BLOCK_SIZE = 1 << 24
    # partial-sum tree rows of 2^TREE_FANOUT_BITS entries
    TREE_FANOUT_BITS = 4
    # prefix queries gathered per numpy pass
    QUERY_CHUNK = 1 << 14
    # numpy int64 carries x, x/n and m*p
    MAX_X = 2**63 - 1
    CAPACITY_BITS = 127
