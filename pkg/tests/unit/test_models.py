"""
Tests for the run configuration and report records
"""

import pytest

from models.pipeline_models import SuiteConfig, CaseResult, Report, BatchReport
from utils.exceptions import ConfigurationError

pytestmark = pytest.mark.unit


class TestSuiteConfig:

    def test_defaults(self):
        config = SuiteConfig()
        assert config.seed == 42
        assert config.degree == 64
        assert config.samples == 1000
        assert (config.tol_alg, config.tol_series, config.tol_sample) == (1e-12, 1e-8, 1e-2)

    @pytest.mark.parametrize("overrides", [
        {'samples': 0},
        {'degree': 0},
        {'workers': 0},
        {'tol_alg': 0.0},
        {'tol_sample': -1e-3},
        {'seed': -1},
        {'seed': 2 ** 64},
    ])
    def test_validation(self, overrides):
        with pytest.raises(ConfigurationError):
            SuiteConfig(**overrides)

    def test_to_dict_omits_execution_options(self):
        data = SuiteConfig(seed=3, suites=['zeros'], workers=4, timing=True).to_dict()
        assert data == {
            'seed': 3,
            'degree': 64,
            'samples': 1000,
            'tolerances': {'alg': 1e-12, 'series': 1e-8, 'sample': 1e-2},
            'suites': ['zeros'],
        }


class TestReport:

    def _report(self) -> Report:
        return Report(suite='demo', cases=[
            CaseResult(name='b_case', passed=True, margin=0.5),
            CaseResult(name='a_case', passed=False, margin=float('-inf'), details={'error': 'boom'}),
        ], runtime_ms=12.5)

    def test_pass_is_conjunction(self):
        report = self._report()
        assert not report.passed
        assert [case.name for case in report.failures] == ['a_case']
        assert Report(suite='empty').passed

    def test_sorted_by_name(self):
        assert [case.name for case in self._report().sorted().cases] == ['a_case', 'b_case']

    def test_infinite_margin_serializes_as_null(self):
        data = self._report().to_dict()
        failing = next(case for case in data['cases'] if case['name'] == 'a_case')
        assert failing['margin'] is None
        assert failing['pass'] is False

    def test_runtime_only_with_timing(self):
        assert 'runtime_ms' not in self._report().to_dict()
        assert self._report().to_dict(include_timing=True)['runtime_ms'] == 12.5

    def test_dict_round_trip(self):
        restored = Report.from_dict(self._report().to_dict(include_timing=True))
        assert restored.suite == 'demo'
        assert restored.runtime_ms == 12.5
        assert restored.cases[0].margin == 0.5


class TestBatchReport:

    def test_summary(self):
        passing = Report(suite='one', cases=[CaseResult(name='x', passed=True)])
        failing = Report(suite='two', cases=[CaseResult(name='y', passed=False, margin=-1.0)])
        batch = BatchReport(config=SuiteConfig(), reports=[passing, failing])
        assert not batch.passed
        assert batch.suites_passed == 1
        assert batch.suites_failed == 1
        assert batch.success_rate == 50.0
        assert batch.to_dict()['pass'] is False

    def test_empty(self):
        batch = BatchReport(config=SuiteConfig())
        assert batch.passed
        assert batch.success_rate == 0.0
