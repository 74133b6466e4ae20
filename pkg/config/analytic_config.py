"""
Precision settings for Li and its inverse
"""


class AnalyticConfig:
    RELATIVE_TOLERANCE = 1e-14
    MAX_NEWTON_ITERATIONS = 60
    # mpmath decimal digits; 30 digits is ~100 bits of mantissa
    PRECISION_DIGITS = 30
