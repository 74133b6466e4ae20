# Read tests/knowledge.md in this directory for how to run tests.
import sys
from pathlib import Path

# modules import as src.* and config.*
ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from config import LogConfig

LogConfig.ENABLED = False
