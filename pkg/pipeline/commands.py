"""
Command pattern implementation for verification suites
"""

import time
from abc import ABC, abstractmethod
from concurrent.futures import Executor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from models.pipeline_models import SuiteConfig, CaseResult, Report
from utils.logging_config import LoggerMixin, VerificationLogger
from utils.seeding import case_rng


@dataclass
class Check:
    """Outcome of one case body: pass flag, signed margin (negative = violation) and details"""
    passed: bool
    margin: Optional[float] = None
    details: Dict[str, Any] = field(default_factory=dict)


def within(deviation: float, tol: float, **details) -> Check:
    """Identity check: deviation must not exceed tol"""
    margin = float(tol - deviation)
    return Check(passed=margin >= 0.0, margin=margin, details={'deviation': float(deviation), 'tol': tol, **details})


def at_least(margin: float, slack: float = 0.0, **details) -> Check:
    """Inequality check: margin must not fall below -slack"""
    signed = float(margin + slack)
    return Check(passed=signed >= 0.0, margin=signed, details={'slack': slack, **details})


def holds(flag: bool, **details) -> Check:
    return Check(passed=bool(flag), details=details)


def combine(*checks: Check) -> Check:
    """All checks must pass; the margin is the smallest reported one"""
    margins = [check.margin for check in checks if check.margin is not None]
    details: Dict[str, Any] = {}
    for check in checks:
        details.update(check.details)
    return Check(
        passed=all(check.passed for check in checks),
        margin=min(margins) if margins else None,
        details=details
    )


def relative(difference: np.ndarray, reference: np.ndarray) -> float:
    """Largest |difference| relative to max(1, |reference|)"""
    scale = max(1.0, float(np.max(np.abs(reference))))
    return float(np.max(np.abs(difference))) / scale


CaseBody = Callable[[np.random.Generator], Check]


class Command(ABC):
    """Base command interface"""

    @abstractmethod
    def execute(self, *args, **kwargs) -> Report:
        """Execute the command"""
        pass


class SuiteCommand(Command, LoggerMixin):
    """
    A named battery of cases.

    Subclasses list their cases as (name, body) pairs; every body receives its
    own generator derived from (seed, suite, case index), so results do not
    depend on execution order or thread count.
    """

    name: str = ""

    def __init__(self, config: SuiteConfig):
        self.config = config

    @abstractmethod
    def cases(self) -> List[Tuple[str, CaseBody]]:
        """Case names and bodies in a fixed order"""
        pass

    def run_case(self, index: int, case_name: str, body: CaseBody) -> CaseResult:
        """Run one case; exceptions become failing cases"""
        try:
            check = body(case_rng(self.config.seed, self.name, index))
        except Exception as e:
            VerificationLogger.log_case_error(self.name, case_name, e)
            return CaseResult(
                name=case_name,
                passed=False,
                margin=float('-inf'),
                details={'error': f"{type(e).__name__}: {e}"}
            )
        VerificationLogger.log_case(self.name, case_name, check.passed, check.margin)
        return CaseResult(name=case_name, passed=check.passed, margin=check.margin, details=check.details)

    def execute(self, executor: Optional[Executor] = None) -> Report:
        """
        Run every case of the suite.

        Args:
            executor: Optional pool; cases are submitted independently

        Returns:
            Report with cases ordered by name
        """
        VerificationLogger.log_suite_start(self.name, self.config.seed, self.config.samples)
        start = time.perf_counter()
        cases = self.cases()
        if executor is None:
            results = [self.run_case(index, case_name, body) for index, (case_name, body) in enumerate(cases)]
        else:
            futures = [
                executor.submit(self.run_case, index, case_name, body)
                for index, (case_name, body) in enumerate(cases)
            ]
            results = [future.result() for future in futures]
        runtime_ms = (time.perf_counter() - start) * 1000.0

        report = Report(suite=self.name, cases=results, runtime_ms=runtime_ms).sorted()
        passed = sum(1 for case in report.cases if case.passed)
        VerificationLogger.log_suite_summary(self.name, passed, len(report.cases), runtime_ms)
        return report
