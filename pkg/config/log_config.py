"""
Log config values for the CSV event logs
"""

import os


class LogConfig:
    DEFAULT_LOG_DOMAIN = "hprimes"
    # Echo rows to stderr; stdout is reserved for command output
    VERBOSE = os.environ.get("HPRIMES_VERBOSE_LOGGING", "0") == "1"
    ENABLED = os.environ.get("HPRIMES_ENABLE_LOGGING", "1") != "0"
    LOG_DIR = os.environ.get("HPRIMES_LOG_DIR", "logs")
    # Maximum size of a log file before a new one is created
    MAX_LOG_FILE_BYTES = 10 * 1024 * 1024  # 10 MB
