"""
Tests for check helpers and the suite command base class
"""

from concurrent.futures import ThreadPoolExecutor

import math
import numpy as np
import pytest

from models.pipeline_models import SuiteConfig
from pipeline.commands import SuiteCommand, within, at_least, holds, combine, relative

pytestmark = pytest.mark.unit


class DrawSuite(SuiteCommand):
    """Cases that record their first draw, plus one that raises"""

    name = "draws"

    def cases(self):
        return [
            ("draw_small", lambda rng: at_least(0.5 - rng.random() / 4, value=rng.random())),
            ("draw_large", lambda rng: within(rng.random(), 1.0)),
            ("broken", self._broken),
        ]

    @staticmethod
    def _broken(rng):
        raise ZeroDivisionError("no inverse")


class TestCheckHelpers:

    def test_within(self):
        check = within(1e-13, 1e-12)
        assert check.passed
        assert check.margin == pytest.approx(9e-13)
        assert not within(2e-12, 1e-12).passed

    def test_at_least_with_slack(self):
        assert not at_least(-0.1).passed
        check = at_least(-0.1, slack=0.2)
        assert check.passed
        assert check.margin == pytest.approx(0.1)

    def test_holds_has_no_margin(self):
        check = holds(True, note="ok")
        assert check.passed
        assert check.margin is None
        assert check.details == {'note': 'ok'}

    def test_combine(self):
        check = combine(within(0.0, 1.0, a=1), at_least(0.25, b=2), holds(True))
        assert check.passed
        assert check.margin == 0.25
        assert check.details['a'] == 1 and check.details['b'] == 2
        assert not combine(within(0.0, 1.0), holds(False)).passed

    def test_relative(self):
        assert relative(np.array([0.5]), np.array([0.1])) == 0.5
        assert relative(np.array([0.5]), np.array([10.0])) == pytest.approx(0.05)


class TestSuiteCommand:

    def test_exception_becomes_failing_case(self):
        report = DrawSuite(SuiteConfig(seed=1)).execute()
        broken = next(case for case in report.cases if case.name == "broken")
        assert not broken.passed
        assert broken.margin == -math.inf
        assert broken.details['error'] == "ZeroDivisionError: no inverse"
        assert broken.to_dict()['margin'] is None
        assert not report.passed

    def test_cases_sorted_by_name(self):
        report = DrawSuite(SuiteConfig(seed=1)).execute()
        assert [case.name for case in report.cases] == ["broken", "draw_large", "draw_small"]

    def test_threaded_matches_serial(self):
        config = SuiteConfig(seed=99)
        serial = DrawSuite(config).execute()
        with ThreadPoolExecutor(max_workers=3) as executor:
            threaded = DrawSuite(config).execute(executor=executor)
        assert serial.to_dict() == threaded.to_dict()

    def test_seed_changes_draws(self):
        first = DrawSuite(SuiteConfig(seed=1)).execute().to_dict()
        second = DrawSuite(SuiteConfig(seed=2)).execute().to_dict()
        assert first != second
