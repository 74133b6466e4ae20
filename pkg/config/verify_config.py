"""
Default domains for the property suites
"""


class VerifyConfig:
    GAP_LIMIT = 10**6
    # last index covered by the tabulated i_0(b)
    PI_SUM_IMAX = 39018
    TABLE_NMAX = 5350
    RH_LIMIT = 2657
    # p_{i+1} / p_i < 1.00025 is checked from here on
    RATIO_START = 396833
    # largest nmax a --limit may ask of the table suites
    TABLE_NMAX_MAX = 10000
