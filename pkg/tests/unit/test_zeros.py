"""
Tests for argument-principle zero counting
"""

import numpy as np
import pytest

from models.octonion import Octonion, UnitImaginary
from models.zero_models import ContourSpec, CountResult
from services.series.constructors import polynomial
from services.series.rational import rational_star
from services.zeros import contour_count, count_zero_spheres, log_derivative
from services.series.evaluation import slice_vector
from utils.exceptions import BadParameter, ZeroOnContour

pytestmark = pytest.mark.unit

E1, E2 = Octonion.basis(1), Octonion.basis(2)


def _upper(nodes: int = 4096) -> ContourSpec:
    return ContourSpec(x0=0.0, y0=1.0, delta=0.3, I=UnitImaginary(E2), M=nodes)


@pytest.mark.parametrize("coeffs, spec, expected", [
    ([-E1, 1.0], _upper(), 2),
    ([1.0], ContourSpec(x0=0.0, y0=0.0, delta=0.5, I=UnitImaginary(E1)), 0),
    ([1.0, 0.0, 1.0], _upper(), 4),
    ([-0.5, 1.0], ContourSpec(x0=0.5, y0=0.0, delta=0.2, I=UnitImaginary(E1)), 2),
])
def test_reference_counts(rng, coeffs, spec, expected):
    result = contour_count(polynomial(coeffs), spec, rng)
    assert result.count == expected
    assert result.guard < 0.05
    assert result.slice_deviation < 1e-6


def test_count_is_slice_independent():
    f = polynomial([-E1, 1.0])
    spec_e2 = _upper()
    spec_e5 = ContourSpec(x0=0.0, y0=1.0, delta=0.3, I=UnitImaginary.basis(5))
    assert contour_count(f, spec_e2).raw == pytest.approx(contour_count(f, spec_e5).raw, abs=1e-6)


def test_node_halving_is_stable():
    f = polynomial([1.0, 0.0, 1.0])
    fine = contour_count(f, _upper(4096)).raw
    coarse = contour_count(f, _upper(2048)).raw
    assert abs(fine - coarse) < 1e-6


def test_product_counts_add(rng):
    f, g = polynomial([-E1, 1.0]), polynomial([1.0, 0.0, 1.0])
    assert contour_count(rational_star(f, g), _upper(), rng).count == 6


def test_zero_spheres():
    assert count_zero_spheres(polynomial([1.0, 0.0, 1.0]), _upper()) == 2.0


def test_zero_on_contour():
    spec = ContourSpec(x0=0.0, y0=0.0, delta=0.5, I=UnitImaginary(E1))
    with pytest.raises(ZeroOnContour):
        contour_count(polynomial([-0.5, 1.0]), spec)


def test_log_derivative_of_power():
    # (f^s)'/f^s for f = w^2 is 4/w; evaluate at a real point
    value = slice_vector(log_derivative(polynomial([0.0, 0.0, 1.0])), 0.5 + 0.0j)
    assert value[0] == pytest.approx(8.0)
    assert np.allclose(value[1:], 0.0)


class TestContourSpec:

    def test_discs_must_be_disjoint(self):
        with pytest.raises(BadParameter):
            ContourSpec(x0=0.0, y0=0.2, delta=0.3, I=UnitImaginary(E1))

    def test_radius_positive(self):
        with pytest.raises(BadParameter):
            ContourSpec(x0=0.0, y0=0.0, delta=0.0, I=UnitImaginary(E1))

    def test_minimum_nodes(self):
        with pytest.raises(BadParameter):
            ContourSpec(x0=0.0, y0=0.0, delta=0.5, I=UnitImaginary(E1), M=16)

    def test_centers(self):
        assert _upper().centers == [1j, -1j]
        assert ContourSpec(x0=0.3, y0=0.0, delta=0.1, I=UnitImaginary(E1)).centers == [0.3 + 0j]

    def test_dict_round_trip(self):
        spec = _upper(1024)
        assert ContourSpec.from_dict(spec.to_dict()) == spec


def test_count_result_serialization():
    result = CountResult(raw=complex(2.0, 1e-12), count=2, guard=1e-12)
    assert result.to_dict()['raw'] == [2.0, 1e-12]
    assert result.to_dict()['count'] == 2
