"""Structured run logging for xopenergy.

Pipeline stages (root finding, energy analysis, scans, multistart) are timed
with :func:`timed_operation` and written as JSON records carrying the run's
correlation id and the process memory.
"""

import json
import logging
import logging.handlers
import threading
import time
import uuid
from contextlib import contextmanager
from functools import wraps
from typing import Any, Dict, Optional

import psutil

from .config import get_config
from .singletons import LoggerSingleton

_RECORD_FIELDS = ("stage", "duration_s", "success", "error", "metric_name", "metric_value",
                  "metric_unit", "command", "parameters", "partition", "degree")


class CorrelationContext:
    """Thread-local correlation id of the current CLI run."""
    _local = threading.local()

    @classmethod
    def get_correlation_id(cls) -> Optional[str]:
        return getattr(cls._local, "correlation_id", None)

    @classmethod
    def set_correlation_id(cls, correlation_id: str):
        cls._local.correlation_id = correlation_id

    @classmethod
    def clear_correlation_id(cls):
        if hasattr(cls._local, "correlation_id"):
            delattr(cls._local, "correlation_id")


class RunContextFilter(logging.Filter):
    """Stamp records with the correlation id and resident memory in MB."""

    def __init__(self, track_memory: bool = True):
        super().__init__()
        self._process = psutil.Process() if track_memory else None

    def filter(self, record):
        record.correlation_id = CorrelationContext.get_correlation_id() or "none"
        record.memory_mb = round(self._process.memory_info().rss / 2**20, 1) if self._process else 0
        return True


class StructuredFormatter(logging.Formatter):
    """One JSON object per record."""

    def format(self, record):
        entry = {
            "timestamp": self.formatTime(record),
            "level": record.levelname,
            "message": record.getMessage(),
            "correlation_id": getattr(record, "correlation_id", "none"),
            "memory_mb": getattr(record, "memory_mb", 0),
        }
        entry.update({key: getattr(record, key) for key in _RECORD_FIELDS if hasattr(record, key)})
        if record.exc_info:
            entry["exception"] = self.formatException(record.exc_info)
        return json.dumps(entry, default=str, ensure_ascii=False)


class EnhancedLogger:
    """Run logger: correlation ids, stage timings, metrics and CLI parameters."""

    def __init__(self):
        self._base_logger = LoggerSingleton().get()
        self._attach_structured_handler()

    def _attach_structured_handler(self):
        config = get_config()
        if not config.ENHANCED_LOGGING_ENABLED or not config.LOG_STRUCTURED_FORMAT:
            return
        if any(isinstance(h.formatter, StructuredFormatter) for h in self._base_logger.handlers):
            return

        config.LOG_DIR.mkdir(parents=True, exist_ok=True)
        handler = logging.handlers.RotatingFileHandler(
            config.LOG_DIR / "xopenergy_structured.log",
            maxBytes=config.LOG_MAX_FILE_SIZE_MB * 1024 * 1024,
            backupCount=config.LOG_ROTATION_BACKUP_COUNT,
            encoding="utf-8",
        )
        handler.setLevel(logging.DEBUG)
        handler.setFormatter(StructuredFormatter())
        if config.LOG_CORRELATION_ENABLED or config.LOG_PERFORMANCE_TRACKING:
            handler.addFilter(RunContextFilter(track_memory=config.LOG_PERFORMANCE_TRACKING))
        self._base_logger.addHandler(handler)

    @contextmanager
    def correlation_context(self, correlation_id: Optional[str] = None):
        """Bind a correlation id to the current thread for one run."""
        correlation_id = correlation_id or uuid.uuid4().hex[:8]
        CorrelationContext.set_correlation_id(correlation_id)
        try:
            yield correlation_id
        finally:
            CorrelationContext.clear_correlation_id()

    def log_stage(self, stage: str, duration: float, success: bool = True, error: Optional[str] = None):
        level = logging.INFO if success else logging.ERROR
        outcome = "finished" if success else f"failed ({error})"
        self._base_logger.log(
            level,
            f"{stage} {outcome} in {duration:.3f}s",
            extra={"stage": stage, "duration_s": duration, "success": success, "error": error},
        )

    def log_performance_metric(self, metric_name: str, value: float, unit: str = "", **kwargs):
        self._base_logger.info(
            f"{metric_name} = {value:.4g}{unit}",
            extra={"metric_name": metric_name, "metric_value": value, "metric_unit": unit, **kwargs},
        )

    def log_run_parameters(self, command: str, parameters: Dict[str, Any]):
        self._base_logger.info(
            f"Running {command}",
            extra={"command": command, "parameters": {k: str(v) for k, v in parameters.items()}},
        )

    def error(self, msg, *args, **kwargs):
        return self._base_logger.error(msg, *args, **kwargs)


def timed_operation(stage: Optional[str] = None):
    """Decorator recording the wall time of a pipeline stage, also on failure."""
    def decorator(func):
        name = stage or f"{func.__module__}.{func.__name__}"

        @wraps(func)
        def wrapper(*args, **kwargs):
            start = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                get_enhanced_logger().log_stage(name, time.perf_counter() - start, success=False, error=str(e))
                raise
            get_enhanced_logger().log_stage(name, time.perf_counter() - start)
            return result

        return wrapper
    return decorator


_enhanced_logger: Optional[EnhancedLogger] = None
_enhanced_lock = threading.Lock()


def get_enhanced_logger() -> EnhancedLogger:
    """Get the enhanced logger singleton."""
    global _enhanced_logger
    if _enhanced_logger is None:
        with _enhanced_lock:
            if _enhanced_logger is None:
                _enhanced_logger = EnhancedLogger()
    return _enhanced_logger
