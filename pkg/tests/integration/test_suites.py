"""
End-to-end runs of the verification suites with reduced sample counts
"""

import pytest

from models.pipeline_models import SuiteConfig
from pipeline import VerificationOrchestrator, run_suite, report_payload
from utils.constants import SUITE_NAMES

pytestmark = [pytest.mark.integration, pytest.mark.slow]


@pytest.mark.parametrize("suite", SUITE_NAMES)
def test_suite_passes(suite):
    report = run_suite(suite, SuiteConfig(seed=42, samples=20, suites=[suite]))
    failures = {case.name: case.details for case in report.failures}
    assert report.passed, failures
    assert report.cases
    assert [case.name for case in report.cases] == sorted(case.name for case in report.cases)


@pytest.mark.parametrize("suite", ["algebra", "growth", "schwarz"])
def test_suite_is_deterministic(suite):
    config = SuiteConfig(seed=123, samples=15, suites=[suite])
    assert run_suite(suite, config).to_dict() == run_suite(suite, config).to_dict()


def test_thread_count_does_not_change_the_report():
    serial = VerificationOrchestrator(SuiteConfig(seed=5, samples=10, suites=["algebra", "quaternion"])).run()
    threaded = VerificationOrchestrator(
        SuiteConfig(seed=5, samples=10, suites=["algebra", "quaternion"], workers=4)
    ).run()
    assert report_payload(serial)['digest'] == report_payload(threaded)['digest']


def test_degree_reaches_the_series_battery():
    low = run_suite("series", SuiteConfig(seed=7, degree=4, samples=3, suites=["series"]))
    high = run_suite("series", SuiteConfig(seed=7, degree=12, samples=3, suites=["series"]))
    low_case = next(case for case in low.cases if case.name == "conjugate_of_product")
    high_case = next(case for case in high.cases if case.name == "conjugate_of_product")
    assert (low_case.details['degree'], high_case.details['degree']) == (4, 12)
    assert low_case.margin != high_case.margin
    assert low.to_dict() != high.to_dict()
