"""
Data models for verification suite runs
"""

import math
from dataclasses import dataclass, field
from typing import Optional, List, Dict, Any

from utils.constants import (
    ALG_TOL, SERIES_TOL, SAMPLE_TOL, DEFAULT_DEGREE, DEFAULT_SAMPLES,
    DEFAULT_SEED, DEFAULT_WORKERS
)
from utils.exceptions import ConfigurationError


@dataclass
class SuiteConfig:
    """Configuration options for a verification run"""
    seed: int = DEFAULT_SEED
    degree: int = DEFAULT_DEGREE
    samples: int = DEFAULT_SAMPLES
    tol_alg: float = ALG_TOL
    tol_series: float = SERIES_TOL
    tol_sample: float = SAMPLE_TOL
    suites: List[str] = field(default_factory=list)

    # Execution options
    workers: int = DEFAULT_WORKERS
    timing: bool = False

    def __post_init__(self):
        if self.samples < 1:
            raise ConfigurationError("samples must be at least 1", context={'samples': self.samples})
        if self.degree < 1:
            raise ConfigurationError("degree must be at least 1", context={'degree': self.degree})
        if self.workers < 1:
            raise ConfigurationError("workers must be at least 1", context={'workers': self.workers})
        for name in ('tol_alg', 'tol_series', 'tol_sample'):
            value = getattr(self, name)
            if not value > 0:
                raise ConfigurationError(f"{name} must be positive", context={name: value})
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigurationError("seed must be a 64-bit unsigned integer", context={'seed': self.seed})

    def to_dict(self) -> Dict[str, Any]:
        return {
            'seed': self.seed,
            'degree': self.degree,
            'samples': self.samples,
            'tolerances': {'alg': self.tol_alg, 'series': self.tol_series, 'sample': self.tol_sample},
            'suites': list(self.suites),
        }


@dataclass
class CaseResult:
    """Outcome of a single verification case"""
    name: str
    passed: bool
    margin: Optional[float] = None
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return not self.passed

    def to_dict(self) -> Dict[str, Any]:
        margin = self.margin
        if margin is not None and not math.isfinite(margin):
            margin = None
        return {
            'name': self.name,
            'pass': self.passed,
            'margin': margin,
            'details': self.details,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CaseResult":
        return cls(
            name=data['name'],
            passed=bool(data['pass']),
            margin=data.get('margin'),
            details=data.get('details', {})
        )


@dataclass
class Report:
    """Result of running one suite"""
    suite: str
    cases: List[CaseResult] = field(default_factory=list)
    runtime_ms: Optional[float] = None

    @property
    def passed(self) -> bool:
        """True when every case passed"""
        return all(case.passed for case in self.cases)

    @property
    def failures(self) -> List[CaseResult]:
        return [case for case in self.cases if case.failed]

    def sorted(self) -> "Report":
        """Copy with cases ordered by name"""
        return Report(
            suite=self.suite,
            cases=sorted(self.cases, key=lambda case: case.name),
            runtime_ms=self.runtime_ms
        )

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        data = {
            'suite': self.suite,
            'pass': self.passed,
            'cases': [case.to_dict() for case in self.cases],
        }
        if include_timing and self.runtime_ms is not None:
            data['runtime_ms'] = self.runtime_ms
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Report":
        return cls(
            suite=data['suite'],
            cases=[CaseResult.from_dict(case) for case in data.get('cases', [])],
            runtime_ms=data.get('runtime_ms')
        )


@dataclass
class BatchReport:
    """Result of running several suites"""
    config: SuiteConfig
    reports: List[Report] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    @property
    def suites_passed(self) -> int:
        return sum(1 for report in self.reports if report.passed)

    @property
    def suites_failed(self) -> int:
        return len(self.reports) - self.suites_passed

    @property
    def success_rate(self) -> float:
        """Passed suites as percentage"""
        if not self.reports:
            return 0.0
        return (self.suites_passed / len(self.reports)) * 100

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        return {
            'config': self.config.to_dict(),
            'pass': self.passed,
            'reports': [report.to_dict(include_timing) for report in self.reports],
        }
