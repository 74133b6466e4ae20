"""Logging system for the h(n) toolkit."""

import csv
import sys
import threading
from dataclasses import dataclass, asdict, field, fields
from datetime import datetime
from typing import List, Optional, Type
from pathlib import Path
from config import LogConfig

@dataclass
class LogEvent:
    """Base class for all log events."""
    timestamp: Optional[datetime] = field(default=None, init=False)

    def __post_init__(self):
        if self.timestamp is None:
            self.timestamp = datetime.now()

@dataclass
class ErrorEvent(LogEvent):
    """Log event for error conditions."""
    error_type: str
    message: str
    source: str
    context: Optional[str] = None

@dataclass
class PifRunEvent(LogEvent):
    """One pi_f(x) evaluation by the combinatorial engine."""
    x: int
    weight: str
    y: int
    a: int
    value: int
    seconds: float

@dataclass
class LocateKEvent(LogEvent):
    """Location of p_k for a given n."""
    n: int
    route: str
    x_estimate: int
    p_k: int
    sigma_k: int
    p_next: int
    correction_primes: int
    seconds: float

@dataclass
class GEvaluationEvent(LogEvent):
    """One G(p_k, m) evaluation."""
    p_k: int
    m: int
    method: str
    s: int
    delta: Optional[int] = None
    inner_evaluations: Optional[int] = None
    seconds: float = 0.0

@dataclass
class HEvent(LogEvent):
    """One h(n) evaluation."""
    n: int
    route: str
    base_prime: int
    ell: int
    seconds: float

@dataclass
class CheckEvent(LogEvent):
    """Outcome of a property suite."""
    name: str
    domain: str
    passed: bool
    violations: int
    equality_witnesses: int
    seconds: float


def _columns(event_type: Type[LogEvent]) -> List[str]:
    return [f.name for f in fields(event_type)]


def _append(path: Path, row: List[str]) -> None:
    with open(path, "a", newline="") as handle:
        csv.writer(handle).writerow(row)


class Logger:
    """Process-wide CSV event sink: one directory per domain, one file per event type."""

    _instance = None
    _lock = threading.Lock()

    def __new__(cls):
        with cls._lock:
            if cls._instance is None:
                instance = super().__new__(cls)
                instance.log_dir = Path(LogConfig.LOG_DIR)
                cls._instance = instance
        return cls._instance

    def _target(self, domain: str, event_type: Type[LogEvent]) -> Path:
        """First file for (domain, event type) still under the size limit: name.csv, name_2.csv, ..."""
        stem = event_type.__name__.lower()
        path = self.log_dir / domain / f"{stem}.csv"
        path.parent.mkdir(parents=True, exist_ok=True)
        suffix = 1
        while path.exists() and path.stat().st_size >= LogConfig.MAX_LOG_FILE_BYTES:
            suffix += 1
            path = path.with_name(f"{stem}_{suffix}.csv")
        if not path.exists():
            _append(path, _columns(event_type))
        return path

    def log(self, event: LogEvent, domain: str = LogConfig.DEFAULT_LOG_DOMAIN) -> None:
        """Append ``event`` as a row under ``domain`` (e.g. "pif", "h", "errors")."""
        if not LogConfig.ENABLED:
            return
        values = asdict(event)
        row = [str(values.get(name, "")) for name in _columns(type(event))]
        with self._lock:
            path = self._target(domain, type(event))
            if LogConfig.VERBOSE:
                print(f"{type(event).__name__}: {row}", file=sys.stderr)
            _append(path, row)


logger = Logger()
