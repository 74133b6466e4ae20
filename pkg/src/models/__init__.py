from .base_model import BaseModel
from .weight import Weight, WeightId, UNIT, IDENTITY
from .prime_tables import PrimeTables
from .pif_run import PifRun
from .hj_table import HTable
from .prime_fraction import PrimeFraction
from .factored_h import FactoredH
from .k_location import KLocation
from .check_report import CheckReport

__all__ = [
    "BaseModel",
    "Weight",
    "WeightId",
    "UNIT",
    "IDENTITY",
    "PrimeTables",
    "PifRun",
    "HTable",
    "PrimeFraction",
    "FactoredH",
    "KLocation",
    "CheckReport",
]
