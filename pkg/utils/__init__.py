"""
Utils package for configuration, logging and errors shared across slicecalc
"""

from .logging_config import setup_logging, LoggerMixin, VerificationLogger, log_success
from .config import config
from .constants import *
from .exceptions import *

__all__ = [
    'setup_logging',
    'LoggerMixin',
    'VerificationLogger',
    'log_success',
    'config',
    # Constants are imported with *
    # Exceptions are imported with *
]
