from .analytic_config import AnalyticConfig
from .h_config import HConfig
from .log_config import LogConfig
from .pif_config import PifConfig
from .sieve_config import SieveConfig
from .verify_config import VerifyConfig

__all__ = ["AnalyticConfig", "HConfig", "LogConfig", "PifConfig", "SieveConfig", "VerifyConfig"]
