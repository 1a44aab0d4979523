"""
Centralized logging configuration and utilities for slicecalc
"""

import logging
import sys
from typing import Optional
from pathlib import Path

from utils.constants import Colors

logger = logging.getLogger(__name__)

SUCCESS_LEVEL = 25  # Between INFO (20) and WARNING (30)
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'

_configured = False


class ColoredFormatter(logging.Formatter):
    """Custom formatter with colors for different log levels"""

    # Map log levels to colors
    COLORS = {
        'DEBUG': Colors.CYAN,
        'INFO': Colors.WHITE,
        'WARNING': Colors.YELLOW,
        'ERROR': Colors.RED,
        'CRITICAL': Colors.MAGENTA,
        'SUCCESS': Colors.GREEN,
    }
    RESET = Colors.RESET

    def format(self, record):
        color = self.COLORS.get(record.levelname, Colors.WHITE)
        formatted = super().format(record)

        if color != Colors.WHITE:
            formatted = f"{color}{formatted}{Colors.RESET}"

        return formatted


def setup_logging(
    level: str = "WARNING",
    log_file: Optional[str] = None,
    console_output: bool = True,
    logger_name: Optional[str] = None,
    force: bool = False
) -> logging.Logger:
    """
    Configure structured logging for the application.

    The root logger is configured on the first call (or whenever force is set);
    later calls only hand out named loggers, so module-level calls never undo
    the configuration chosen by the CLI.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Path to log file, None to disable file logging
        console_output: Whether to output to the console (stderr)
        logger_name: Name for the logger (typically __name__)
        force: Reconfigure handlers even if logging was already set up

    Returns:
        Configured logger for the module if logger_name provided, otherwise root logger
    """
    global _configured

    if force or not _configured:
        console_formatter = ColoredFormatter(LOG_FORMAT, datefmt=DATE_FORMAT)
        file_formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)

        root_logger = logging.getLogger()
        root_logger.setLevel(getattr(logging, level.upper(), logging.WARNING))
        root_logger.handlers.clear()

        # stdout carries JSON results, so the console handler writes to stderr
        if console_output:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setFormatter(console_formatter)
            root_logger.addHandler(console_handler)

        if log_file:
            log_path = Path(log_file)
            log_path.parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.FileHandler(log_path)
            file_handler.setFormatter(file_formatter)
            root_logger.addHandler(file_handler)

        _configured = True

    if logger_name:
        return logging.getLogger(logger_name)
    return logging.getLogger()


def log_success(logger_instance, message: str):
    """Log a success message with green color"""
    if not logger_instance.isEnabledFor(SUCCESS_LEVEL):
        return
    record = logging.LogRecord(
        name=logger_instance.name,
        level=SUCCESS_LEVEL,
        pathname="",
        lineno=0,
        msg=message,
        args=(),
        exc_info=None
    )
    record.levelname = "SUCCESS"
    logger_instance.handle(record)


class LoggerMixin:
    """Mixin class to provide logger to any class"""

    @property
    def logger(self) -> logging.Logger:
        """Get logger for this class"""
        return logging.getLogger(self.__class__.__module__ + '.' + self.__class__.__name__)


class VerificationLogger:
    """Utility class for consistent logging across verification suites"""

    @staticmethod
    def log_suite_start(suite: str, seed: int, samples: int):
        """Log start of a verification suite"""
        logger.info(f"Running suite '{suite}' (seed={seed}, samples={samples})")

    @staticmethod
    def log_case(suite: str, case: str, passed: bool, margin: Optional[float]):
        """Log the outcome of a single case"""
        margin_text = "n/a" if margin is None else f"{margin:.3e}"
        if passed:
            logger.debug(f"[{suite}] {case}: pass (margin {margin_text})")
        else:
            logger.error(f"[{suite}] {case}: FAIL (margin {margin_text})")

    @staticmethod
    def log_case_error(suite: str, case: str, error: Exception):
        """Log an exception raised inside a case"""
        logger.error(f"[{suite}] {case}: raised {type(error).__name__}: {error}")

    @staticmethod
    def log_suite_summary(suite: str, passed: int, total: int, runtime_ms: float):
        """Log suite summary"""
        if passed == total:
            log_success(logger, f"Suite '{suite}': {passed}/{total} cases passed in {runtime_ms:.0f} ms")
        else:
            logger.error(f"Suite '{suite}': {total - passed}/{total} cases failed")
