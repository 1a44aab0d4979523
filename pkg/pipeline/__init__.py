"""
Verification pipeline: suite commands and their orchestration
"""

from .orchestrator import VerificationOrchestrator, resolve_suites, run_suite, report_payload
from .commands import SuiteCommand, Check
from .suites import SUITES

__all__ = [
    'VerificationOrchestrator',
    'resolve_suites',
    'run_suite',
    'report_payload',
    'SuiteCommand',
    'Check',
    'SUITES'
]
