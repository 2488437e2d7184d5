"""Tests for the logger singleton and the enhanced logger."""

import json
import logging

from backend.app.core.enhanced_logger import (
    CorrelationContext,
    RunContextFilter,
    StructuredFormatter,
    get_enhanced_logger,
    timed_operation,
)
from backend.app.core.errors import (
    CoincidentPointsError,
    InvalidPartitionError,
    RootFindingError,
    XopEnergyError,
)
from backend.app.core.singletons import LoggerSingleton, get_logger


def test_logger_is_singleton():
    assert LoggerSingleton() is LoggerSingleton()
    assert get_logger() is get_logger()
    assert get_logger().name == "xopenergy"


def test_correlation_context_sets_and_clears():
    logger = get_enhanced_logger()
    with logger.correlation_context("abc123") as correlation_id:
        assert correlation_id == "abc123"
        assert CorrelationContext.get_correlation_id() == "abc123"
    assert CorrelationContext.get_correlation_id() is None


def test_structured_formatter_emits_json():
    record = logging.LogRecord("xopenergy", logging.INFO, __file__, 1, "zeros found", None, None)
    record.correlation_id = "run-1"
    payload = json.loads(StructuredFormatter().format(record))
    assert payload["message"] == "zeros found"
    assert payload["level"] == "INFO"


def test_stage_fields_and_run_context():
    record = logging.LogRecord("xopenergy", logging.INFO, __file__, 1, "scan_f finished", None, None)
    record.stage = "scan_f"
    record.duration_s = 0.25
    record.unrelated = "dropped"
    with get_enhanced_logger().correlation_context("run-2"):
        assert RunContextFilter().filter(record)
    payload = json.loads(StructuredFormatter().format(record))
    assert payload["correlation_id"] == "run-2"
    assert payload["stage"] == "scan_f"
    assert payload["duration_s"] == 0.25
    assert payload["memory_mb"] > 0
    assert "unrelated" not in payload


def test_timed_operation_returns_and_reraises():
    @timed_operation("double")
    def double(x):
        return 2 * x

    @timed_operation("explode")
    def explode():
        raise CoincidentPointsError("points 0 and 1 coincide")

    assert double(21) == 42
    try:
        explode()
    except CoincidentPointsError as e:
        assert "coincide" in str(e)
    else:
        raise AssertionError("expected CoincidentPointsError")


class TestErrorHierarchy:
    def test_input_errors_are_value_errors(self):
        assert issubclass(InvalidPartitionError, ValueError)
        assert issubclass(CoincidentPointsError, ValueError)

    def test_all_errors_share_a_base(self):
        assert issubclass(RootFindingError, XopEnergyError)
        error = RootFindingError("no convergence", root_index=3, sweeps=200)
        assert error.root_index == 3
        assert error.sweeps == 200
