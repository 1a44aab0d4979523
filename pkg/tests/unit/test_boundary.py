"""
Tests for the boundary Schwarz quantities and pointwise product checks
"""

import numpy as np
import pytest

from models.octonion import Octonion, UnitImaginary, ONE
from services.algebra.sampling import sample, sample_unit_imaginary
from services.geometry.boundary import (
    boundary_modulus_derivative, modulus_inequality_check, convex_combination_check, contact_bound
)
from services.geometry.extremum import extremum_scan
from services.geometry.pointwise import pointwise_star_check, camshaft_search, CAMSHAFT_DEVIATION
from services.series.constructors import (
    polynomial, extremal, monomial_rotation, random_series, random_octonionic_self_map
)
from utils.constants import IDENTITY_TOL
from utils.exceptions import NotContactPoint, BadParameter, HypothesisViolated, ZeroAtPoint

pytestmark = pytest.mark.unit


class TestBoundaryModulusDerivative:

    def test_worked_example(self, worked_example):
        report = boundary_modulus_derivative(worked_example, Octonion.basis(2))
        assert report.delta == pytest.approx(8.0 / 3.0, abs=1e-9)
        assert report.imag_residual < 1e-9
        assert report.fd_crosscheck == pytest.approx(8.0 / 3.0, abs=1e-3)
        assert report.margin >= -1e-9

    def test_identity(self, rng):
        xi = sample(rng, 'sphere')
        report = boundary_modulus_derivative(polynomial([0.0, 1.0]), xi)
        assert report.delta == pytest.approx(1.0, abs=1e-12)
        assert report.fixed_point_bound == pytest.approx(1.0, abs=1e-12)

    def test_rotated_square(self, rng):
        xi = sample(rng, 'sphere')
        report = boundary_modulus_derivative(monomial_rotation(2, xi.conj()), xi)
        assert report.delta == pytest.approx(2.0, abs=1e-9)

    @pytest.mark.parametrize("a", [-0.5, 0.0, 0.5])
    def test_extremal_equality(self, a):
        xi = Octonion.from_slice(complex(np.cos(0.7), np.sin(0.7)), Octonion.basis(5))
        report = boundary_modulus_derivative(extremal(a, xi), xi)
        assert report.delta == pytest.approx(2.0 / (1.0 - a), abs=1e-8)
        assert report.fixed_point_bound == pytest.approx(report.delta, abs=1e-8)

    def test_random_self_maps(self, rng):
        for _ in range(20):
            f, xi = random_octonionic_self_map(rng)
            report = boundary_modulus_derivative(f, xi)
            assert report.margin >= -1e-8
            assert report.imag_residual <= 1e-8

    def test_not_a_contact_point(self):
        with pytest.raises(NotContactPoint):
            boundary_modulus_derivative(polynomial([0.0, 0.5]), ONE)

    def test_boundary_point_must_be_unit(self):
        with pytest.raises(BadParameter):
            boundary_modulus_derivative(polynomial([0.0, 1.0]), Octonion(0.5))

    def test_bounds_listing(self, worked_example):
        bounds = boundary_modulus_derivative(worked_example, Octonion.basis(2)).bounds()
        assert 'contact_bound' in bounds
        assert 'sharp_bound' not in bounds


def test_contact_bound_at_origin():
    assert contact_bound(Octonion(0.0), Octonion.basis(3)) == 1.0


def test_contact_bound_off_origin():
    assert contact_bound(Octonion(0.5), ONE) == pytest.approx(1.0 / 3.0)
    assert contact_bound(Octonion(0.5), -ONE) == pytest.approx(3.0)


def test_modulus_inequality(rng):
    for _ in range(20):
        f, _ = random_octonionic_self_map(rng)
        assert modulus_inequality_check(f, 0.95 * sample(rng, 'ball')) >= -1e-9
    assert modulus_inequality_check(polynomial([0.0, 1.0]), 0.5 * Octonion.basis(1)) == pytest.approx(0.0, abs=1e-14)


class TestConvexCombination:

    def test_identity_holds(self, rng):
        unit_i, unit_j = sample_unit_imaginary(rng), sample_unit_imaginary(rng)
        f = polynomial([0.3, unit_i.value, 0.5, 0.2 * unit_i.value])
        assert convex_combination_check(f, 0.2, 0.4, unit_i, unit_j) < 1e-12

    def test_coefficients_must_stay_in_slice(self):
        f = polynomial([0.0, Octonion.basis(2)])
        with pytest.raises(HypothesisViolated):
            convex_combination_check(f, 0.1, 0.1, UnitImaginary.basis(1), UnitImaginary.basis(3))


class TestPointwiseProduct:

    def test_quaternionic_formula(self, rng):
        f = random_series(rng, 4, quaternionic=True)
        g = random_series(rng, 4, quaternionic=True)
        result = pointwise_star_check(f, g, sample(rng, 'quaternion-ball'))
        assert result.quat_identity < 1e-10

    def test_octonionic_identities(self, rng):
        f = random_series(rng, 4)
        g = random_series(rng, 4)
        result = pointwise_star_check(f, g, sample(rng, 'ball'))
        assert result.quat_identity is None
        assert result.octo_inner_identity < 1e-10
        assert result.octo_modulus_identity < 1e-10

    def test_zero_of_non_quaternionic_factor(self):
        w = 0.5 * Octonion.basis(5)
        f = polynomial([-w, 1.0])
        with pytest.raises(ZeroAtPoint):
            pointwise_star_check(f, polynomial([Octonion.basis(1)]), w)

    def test_camshaft_witness(self, rng):
        found = camshaft_search(rng)
        assert found is not None
        _, _, _, result = found
        assert result.pointwise_deviation > CAMSHAFT_DEVIATION
        assert result.octo_inner_identity <= IDENTITY_TOL


class TestExtremumScan:

    def test_self_map_passes(self, rng):
        f, _ = random_octonionic_self_map(rng)
        assert extremum_scan(f, rng).passed

    def test_constant_function(self, rng):
        report = extremum_scan(polynomial([0.5]), rng)
        assert report.constant
        assert report.passed

    def test_spherical_zero_has_no_real_axis_minimum(self, rng):
        report = extremum_scan(polynomial([0.25, 0.0, 1.0]), rng)
        assert report.real_axis_minima == []
        assert report.passed
