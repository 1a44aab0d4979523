"""
Tests for growth, distortion and covering on the Koebe functions
"""

import numpy as np
import pytest

from models.octonion import Octonion
from services.algebra.sampling import sample, sample_unit_imaginary
from services.geometry.growth import growth_distortion_check, quarter_covering_check, log_quotient
from services.series.constructors import koebe, polynomial
from services.series.evaluation import evaluate
from utils.exceptions import BadParameter

pytestmark = pytest.mark.unit


@pytest.mark.parametrize("r", [0.3, 0.6, 0.9])
def test_koebe_equality_on_real_axis(rng, r):
    f = koebe(sample_unit_imaginary(rng), 0.0)
    upper = growth_distortion_check(f, Octonion(r))
    lower = growth_distortion_check(f, Octonion(-r))
    assert upper.growth_upper == pytest.approx(0.0, abs=1e-9 * max(1.0, r / (1.0 - r) ** 2))
    assert upper.quotient_upper == pytest.approx(0.0, abs=1e-9 * max(1.0, (1.0 + r) / (1.0 - r)))
    assert lower.growth_lower == pytest.approx(0.0, abs=1e-9)
    assert lower.distortion_lower == pytest.approx(0.0, abs=1e-9)


def test_bounds_hold_at_random_points(rng):
    for _ in range(50):
        f = koebe(sample_unit_imaginary(rng), 2.0 * np.pi * rng.random())
        margins = growth_distortion_check(f, 0.95 * sample(rng, 'ball'))
        assert margins.margin >= -1e-9
        assert set(margins.to_dict()) == {
            'growth_lower', 'growth_upper', 'distortion_lower', 'distortion_upper',
            'quotient_lower', 'quotient_upper'
        }


def test_log_quotient_of_identity_is_one(rng):
    value = evaluate(log_quotient(polynomial([0.0, 1.0])), 0.5 * sample(rng, 'ball'))
    assert value.isclose(Octonion(1.0), tol=1e-12)


def test_point_outside_ball():
    with pytest.raises(BadParameter):
        growth_distortion_check(polynomial([0.0, 1.0]), Octonion(1.0))


def test_quarter_covering(rng):
    minimum = quarter_covering_check(koebe(sample_unit_imaginary(rng), np.pi / 3.0), rng)
    assert minimum >= 0.249
    with pytest.raises(BadParameter):
        quarter_covering_check(polynomial([0.0, 1.0]), rng, rho=1.0)
