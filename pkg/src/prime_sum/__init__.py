from .phi_sieve import PartialSumTree, PhiSieve
from .segments import AscendingPrimeSum, prefix_weights
from .leaves import (
    grouped_quotient_sum,
    iroot,
    ordinary_leaves,
    s1_leaves,
    s2_parts,
    s3_leaves,
    summatory,
)
from .engine import check_y, choose_y, p2, pif, pif_run, special_leaves

__all__ = [
    "PartialSumTree",
    "PhiSieve",
    "AscendingPrimeSum",
    "prefix_weights",
    "grouped_quotient_sum",
    "iroot",
    "ordinary_leaves",
    "s1_leaves",
    "s2_parts",
    "s3_leaves",
    "summatory",
    "check_y",
    "choose_y",
    "p2",
    "pif",
    "pif_run",
    "special_leaves",
]
