from .checks import (
    BaseCheck,
    GapLemmaCheck,
    IncreasingCheck,
    ParityCheck,
    PiSumTableCheck,
    RhWindowCheck,
    StructureCheck,
    SUITES,
    build_checks,
    check_gap_lemmas,
    check_increasing,
    check_parity,
    check_pi_sum_table,
    check_rh_window,
    check_structure_props,
    run_checks,
)

__all__ = [
    "BaseCheck",
    "GapLemmaCheck",
    "IncreasingCheck",
    "ParityCheck",
    "PiSumTableCheck",
    "RhWindowCheck",
    "StructureCheck",
    "SUITES",
    "build_checks",
    "check_gap_lemmas",
    "check_increasing",
    "check_parity",
    "check_pi_sum_table",
    "check_rh_window",
    "check_structure_props",
    "run_checks",
]
