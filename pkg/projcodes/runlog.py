"""
Run Logging for projcodes

Structured JSON-lines trail of constructions, verifications and table runs.
Events carry timestamps, so they go to the run log only and never into
code dumps.
"""

import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional, Any
from dataclasses import dataclass, asdict
from enum import Enum

from projcodes.config import get_settings


# ============================================================================
# Run Event Types
# ============================================================================

class RunEventType(Enum):
    """Types of logged events."""
    BUILD_STARTED = "build_started"
    CLASS_BUILT = "class_built"
    BUILD_FINISHED = "build_finished"

    VERIFY_STARTED = "verify_started"
    VERIFY_FINISHED = "verify_finished"
    CERTIFICATION_FAILED = "certification_failed"

    TABLE_ROW = "table_row"
    BOUNDS_COMPUTED = "bounds_computed"
    DUMP_WRITTEN = "dump_written"

    ERROR = "error"


class RunSeverity(Enum):
    """Severity levels for run events."""
    DEBUG = "debug"
    INFO = "info"
    WARNING = "warning"
    ERROR = "error"
    CRITICAL = "critical"


@dataclass
class RunEvent:
    """Represents a single run event."""
    timestamp: str
    event_type: str
    severity: str
    command: str
    operation: str
    success: bool
    parameters: Optional[dict[str, Any]] = None
    details: Optional[dict[str, Any]] = None
    error_message: Optional[str] = None

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary, excluding None values."""
        return {k: v for k, v in asdict(self).items() if v is not None}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), default=str)


# ============================================================================
# Run Logger Class
# ============================================================================

class RunLogger:
    """
    JSON-lines logger for construction and verification runs.

    Writes through the standard logging module to a file handler on
    the ``projcodes.runs`` logger.
    """

    def __init__(
        self,
        log_dir: Optional[str] = None,
        log_file: Optional[str] = None,
        config: Optional[dict[str, Any]] = None
    ):
        self.config = config if config is not None else get_settings().section("logging")
        self.enabled = self.config.get("run_log", True)

        if log_dir is None:
            log_dir = self.config.get("log_dir") or Path(__file__).parent.parent / "logs"
        self.log_dir = Path(log_dir)
        self.log_file = self.log_dir / (log_file or self.config.get("log_file", "projcodes_runs.log"))

        self.logger = logging.getLogger("projcodes.runs")
        self.logger.propagate = False
        if self.enabled:
            self._setup_logger()

    def _setup_logger(self):
        """Attach a file handler for this log file (once)."""
        log_level = getattr(
            logging,
            str(self.config.get("log_level", "INFO")).upper(),
            logging.INFO
        )
        self.logger.setLevel(log_level)

        target = str(self.log_file.resolve())
        for handler in self.logger.handlers:
            if isinstance(handler, logging.FileHandler) and handler.baseFilename == target:
                return

        self.log_dir.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(self.log_file)
        file_handler.setLevel(log_level)
        file_handler.setFormatter(logging.Formatter('%(message)s'))
        self.logger.addHandler(file_handler)

    def close(self):
        """Detach and close this logger's file handler."""
        target = str(self.log_file.resolve())
        for handler in list(self.logger.handlers):
            if isinstance(handler, logging.FileHandler) and handler.baseFilename == target:
                self.logger.removeHandler(handler)
                handler.close()

    def log(
        self,
        event_type: RunEventType,
        command: str,
        operation: str,
        success: bool = True,
        severity: RunSeverity = RunSeverity.INFO,
        parameters: Optional[dict[str, Any]] = None,
        details: Optional[dict[str, Any]] = None,
        error_message: Optional[str] = None
    ):
        """
        Log a run event.

        Args:
            event_type: Type of event
            command: CLI command or library entry point (construct, verify, ...)
            operation: Short description
            success: Whether the step succeeded
            severity: Log severity level
            parameters: Run parameters (n, q, d, metric, ...)
            details: Additional details
            error_message: Error message if failed
        """
        if not self.enabled:
            return
        level = getattr(logging, severity.value.upper(), logging.INFO)
        if not self.logger.isEnabledFor(level):
            return

        event = RunEvent(
            timestamp=datetime.now(timezone.utc).isoformat().replace("+00:00", "Z"),
            event_type=event_type.value,
            severity=severity.value,
            command=command,
            operation=operation,
            success=success,
            parameters=parameters,
            details=details,
            error_message=error_message
        )

        log_method = getattr(self.logger, severity.value, self.logger.info)
        log_method(event.to_json())

    # =========================================================================
    # Convenience Methods
    # =========================================================================

    def log_build_finished(self, command: str, parameters: dict[str, Any], classes: int, size_digits: str, rate: float):
        """Log a completed construction."""
        self.log(
            event_type=RunEventType.BUILD_FINISHED,
            command=command,
            operation=f"Built {classes} classes, log_q M = {rate:.4f}",
            parameters=parameters,
            details={"classes": classes, "M": size_digits, "rate": round(rate, 6)}
        )

    def log_verification(self, parameters: dict[str, Any], report: dict[str, Any]):
        """Log a verification outcome; failures are warnings."""
        certified = bool(report.get("certified"))
        self.log(
            event_type=RunEventType.VERIFY_FINISHED if certified else RunEventType.CERTIFICATION_FAILED,
            command="verify",
            operation="Certified" if certified else "Certification failed",
            success=certified,
            severity=RunSeverity.INFO if certified else RunSeverity.WARNING,
            parameters=parameters,
            details=report
        )

    def log_error(self, command: str, error: dict[str, Any]):
        """Log a formatted error (see errors.format_error)."""
        self.log(
            event_type=RunEventType.ERROR,
            command=command,
            operation=error.get("code", "UNKNOWN"),
            success=False,
            severity=RunSeverity.ERROR,
            error_message=error.get("message"),
            details={"module": error.get("module"), "category": error.get("category")}
        )


# ============================================================================
# Global Run Logger Instance
# ============================================================================

_run_logger: Optional[RunLogger] = None


def get_run_logger() -> RunLogger:
    """Get or create the global run logger."""
    global _run_logger
    if _run_logger is None:
        _run_logger = RunLogger()
    return _run_logger


def reset_run_logger(logger: Optional[RunLogger] = None):
    """Replace (or clear) the global run logger."""
    global _run_logger
    if _run_logger is not None and _run_logger is not logger:
        _run_logger.close()
    _run_logger = logger


def log_run_event(
    event_type: RunEventType,
    command: str,
    operation: str,
    success: bool = True,
    **kwargs
):
    """Convenience function to log a run event."""
    get_run_logger().log(
        event_type=event_type,
        command=command,
        operation=operation,
        success=success,
        **kwargs
    )
