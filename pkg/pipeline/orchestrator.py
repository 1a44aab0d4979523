"""
Verification orchestrator for running suites and aggregating their reports
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from contextlib import nullcontext
from typing import Any, Dict, List, Sequence

from models.pipeline_models import SuiteConfig, Report, BatchReport
from utils.constants import SUITE_NAMES, ALL_SUITES
from utils.exceptions import UnknownSuite
from utils.json_io import payload_digest
from utils.logging_config import LoggerMixin, log_success
from .suites import SUITES


def resolve_suites(names: Sequence[str]) -> List[str]:
    """
    Expand 'all' and drop duplicates, keeping canonical order for 'all'
    and first-mention order otherwise.

    Raises:
        UnknownSuite: If a name is not a registered suite
    """
    resolved: List[str] = []
    for name in names or [ALL_SUITES]:
        if name == ALL_SUITES:
            expanded = SUITE_NAMES
        elif name in SUITES:
            expanded = [name]
        else:
            raise UnknownSuite(f"Unknown suite '{name}'", context={'known': SUITE_NAMES + [ALL_SUITES]})
        resolved.extend(suite for suite in expanded if suite not in resolved)
    return resolved


def run_suite(name: str, config: SuiteConfig) -> Report:
    """
    Run one named suite serially.

    'all' runs every suite and merges their cases into one report named
    'all', with case names prefixed by their suite ('algebra.moufang').

    Raises:
        UnknownSuite: If the name is neither a suite nor 'all'
    """
    names = resolve_suites([name])
    if name != ALL_SUITES:
        return SUITES[name](config).execute()
    reports = [SUITES[suite](config).execute() for suite in names]
    cases = [replace(case, name=f"{report.suite}.{case.name}") for report in reports for case in report.cases]
    timings = [report.runtime_ms for report in reports if report.runtime_ms is not None]
    return Report(suite=ALL_SUITES, cases=cases, runtime_ms=sum(timings) if timings else None)


class VerificationOrchestrator(LoggerMixin):
    """Runs the requested suites and aggregates a batch report"""

    def __init__(self, config: SuiteConfig):
        """
        Initialize orchestrator with a suite configuration.

        Args:
            config: Seed, sample counts, tolerances and suite names
        """
        self.config = config
        self.suite_names = resolve_suites(config.suites)

    def run(self) -> BatchReport:
        """
        Run every resolved suite.

        Cases of a suite are submitted to a thread pool when workers > 1;
        per-case generators make the result independent of scheduling.
        """
        self.logger.info(f"Running suites: {', '.join(self.suite_names)} (workers={self.config.workers})")
        pool = ThreadPoolExecutor(max_workers=self.config.workers) if self.config.workers > 1 else nullcontext()
        reports = []
        with pool as executor:
            for name in self.suite_names:
                reports.append(SUITES[name](self.config).execute(executor=executor))

        batch = BatchReport(config=replace(self.config, suites=self.suite_names), reports=reports)
        self._log_batch_summary(batch)
        return batch

    def _log_batch_summary(self, batch: BatchReport):
        """Log a summary of the batch"""
        self.logger.info("Verification Summary:")
        self.logger.info(f"  Suites run: {len(batch.reports)}")
        log_success(self.logger, f"Suites passed: {batch.suites_passed}")
        if batch.suites_failed > 0:
            self.logger.error(f"Suites failed: {batch.suites_failed}")
            for report in batch.reports:
                for case in report.failures:
                    self.logger.error(f"  - {report.suite}.{case.name}: margin {case.margin}")
        log_success(self.logger, f"Pass rate: {batch.success_rate:.1f}%")


def report_payload(batch: BatchReport, include_timing: bool = False) -> Dict[str, Any]:
    """
    JSON payload of a batch with a sha256 digest of the timing-free case payload,
    so identical configs give identical digests.
    """
    payload = batch.to_dict(include_timing=include_timing)
    payload['digest'] = payload_digest(batch.to_dict(include_timing=False))
    return payload
