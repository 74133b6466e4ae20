"""
Thresholds for h(n), G(p_k, m) and the DP table
"""


class HConfig:
    SMALL_N_THRESHOLD = 5350
    LOCATE_DIRECT_THRESHOLD = 10**6
    MAX_N = 16 * 10**34
    EXPANSION_BUDGET = 10**4
    LOG10_MAX_BASE = 10**9

    G_COMBINATORIAL_CAP = 10**5
    # g() hands larger m to the delta-accelerated path
    G_DIRECT_MAX_M = 400
    DELTA_CAP = 10**4

    MAX_TABLE_CELLS = 4 * 10**7
    BRUTE_FORCE_MAX_N = 70
    THREADS = 1
