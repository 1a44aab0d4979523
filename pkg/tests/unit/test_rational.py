"""
Tests for regular rationals, remainders and the named families
"""

import numpy as np
import pytest

from models.octonion import Octonion, ONE
from models.series_models import SliceSeries, RegularRational
from services.algebra.sampling import sample, sample_unit_imaginary
from services.series import (
    evaluate, rational_star, rational_add, rational_scale, rational_conjugate, rational_reciprocal,
    rational_derivative, shift, taylor_coefficients, remainder, second_remainder, sphere_derivative,
    directional_derivative, construct
)
from services.series.constructors import (
    polynomial, mobius, koebe, extremal, monomial_rotation, random_series, random_invertible_series
)
from services.series.remainder import derivative_at, directional_derivative_fd, spherical_value
from utils.exceptions import BadParameter, RealPoint

pytestmark = pytest.mark.unit

GEOMETRIC = RegularRational(num=SliceSeries.constant(1.0), den=np.array([1.0, -1.0]))


class TestRationalCalculus:

    def test_taylor_coefficients_of_geometric_series(self):
        assert np.allclose(taylor_coefficients(GEOMETRIC, 6).coeffs[:, 0], np.ones(7))

    def test_derivative_quotient_rule(self):
        # d/dw (1 - w)^{-1} = (1 - w)^{-2}
        assert evaluate(rational_derivative(GEOMETRIC), Octonion(0.5)).isclose(Octonion(4.0), tol=1e-12)

    def test_shift(self, rng):
        f = random_series(rng, 3)
        w = Octonion(0.7)
        assert evaluate(shift(f), w).isclose(w * evaluate(f, w), tol=1e-12)

    def test_add_with_different_denominators(self):
        # 1/(1-w) + 1/(1+w) = 2/(1-w^2)
        other = RegularRational(num=SliceSeries.constant(1.0), den=np.array([1.0, 1.0]))
        w = Octonion.from_slice(0.3 + 0.2j, Octonion.basis(4))
        expected = evaluate(RegularRational(num=SliceSeries.constant(2.0), den=np.array([1.0, 0.0, -1.0])), w)
        assert evaluate(rational_add(GEOMETRIC, other), w).isclose(expected, tol=1e-12)

    def test_scale_sides(self):
        e1, e2 = Octonion.basis(1), Octonion.basis(2)
        f = polynomial([e1])
        assert evaluate(rational_scale(f, e2), Octonion(0.0)) == e1 * e2
        assert evaluate(rational_scale(f, e2, side='left'), Octonion(0.0)) == e2 * e1

    def test_reciprocal_is_inverse(self, rng):
        f = rational_star(random_invertible_series(rng, 3), GEOMETRIC)
        w = 0.4 * sample(rng, 'ball')
        assert evaluate(rational_star(rational_reciprocal(f), f), w).isclose(ONE, tol=1e-10)
        assert evaluate(rational_star(f, rational_reciprocal(f)), w).isclose(ONE, tol=1e-10)

    def test_conjugate_at_real_point(self, rng):
        f = random_series(rng, 4)
        x = Octonion(-0.3)
        assert evaluate(rational_conjugate(f), x).isclose(evaluate(f, x).conj(), tol=1e-14)


class TestRemainder:

    def test_remainder_identity(self, rng):
        f = random_series(rng, 7)
        xi = 0.8 * sample(rng, 'sphere')
        w = 0.9 * sample(rng, 'ball')
        quotient = remainder(f, xi)
        rebuilt = evaluate(rational_star(polynomial([-xi, 1.0]), quotient), w)
        assert rebuilt.isclose(evaluate(f, w) - evaluate(f, xi), tol=1e-11)

    def test_remainder_of_rational(self, worked_example):
        xi = 0.5 * Octonion.basis(3)
        w = Octonion.from_slice(0.2 + 0.1j, Octonion.basis(6))
        quotient = remainder(worked_example, xi)
        rebuilt = evaluate(rational_star(polynomial([-xi, 1.0]), quotient), w)
        assert rebuilt.isclose(evaluate(worked_example, w) - evaluate(worked_example, xi), tol=1e-10)

    def test_sphere_derivative_of_square(self, rng):
        # w^2: (f(xi) - f(conj xi)) / (2 Im xi) = 2 Re xi
        xi = sample(rng, 'ball')
        value = sphere_derivative(SliceSeries.monomial(2), xi)
        assert value.isclose(Octonion(2.0 * xi.re), tol=1e-12)
        assert spherical_value(SliceSeries.monomial(2), xi).isclose(value, tol=1e-12)

    def test_sphere_derivative_at_real_point(self):
        with pytest.raises(RealPoint):
            sphere_derivative(SliceSeries.monomial(2), Octonion(0.3))

    def test_spherical_value_at_real_point_is_derivative(self, rng):
        f = random_series(rng, 5)
        x = Octonion(0.25)
        assert spherical_value(f, x).isclose(derivative_at(f, x), tol=1e-12)

    def test_directional_derivative(self, rng):
        f = random_series(rng, 6)
        xi = 0.6 * sample(rng, 'sphere')
        v = sample(rng, 'sphere')
        analytic = directional_derivative(f, xi, v)
        assert (analytic - directional_derivative_fd(f, xi, v)).norm() < 1e-6

    def test_direction_must_be_unit(self):
        with pytest.raises(BadParameter):
            directional_derivative(SliceSeries.monomial(2), Octonion(0.1), 2.0 * ONE)


class TestWorkedExample:

    def test_fixed_point(self, worked_example):
        unit_j = Octonion.basis(2)
        assert evaluate(worked_example, unit_j).isclose(unit_j, tol=1e-12)

    def test_derivative_and_second_coefficient(self, worked_example):
        unit_i, unit_j = Octonion.basis(1), Octonion.basis(2)
        expected_first = (4.0 / 3.0) * (2.0 - unit_i * unit_j)
        expected_second = (2.0 / 3.0) * (unit_i - 2.0 * unit_j)
        assert derivative_at(worked_example, unit_j).isclose(expected_first, tol=1e-9)
        assert second_remainder(worked_example, unit_j).isclose(expected_second, tol=1e-9)


class TestFamilies:

    def test_extremal_zero_is_rotated_square(self):
        f = extremal(0.0, 1.0)
        assert np.allclose(f.den, [1.0])
        assert evaluate(f, Octonion(0.5)).isclose(Octonion(0.25), tol=1e-14)
        assert evaluate(f, 0.5 * Octonion.basis(1)).isclose(Octonion(-0.25), tol=1e-14)

    def test_koebe_real_value(self):
        f = koebe(Octonion.basis(1), 0.0)
        assert evaluate(f, Octonion(0.3)).isclose(Octonion(0.3 / 0.49), tol=1e-12)

    def test_quaternionic_mobius_maps_sphere_to_sphere(self, rng):
        f = mobius(0.5 * sample(rng, 'quaternion-ball'), sample(rng, 'quaternion-sphere'))
        xi = sample(rng, 'quaternion-sphere')
        assert evaluate(f, xi).norm() == pytest.approx(1.0, abs=1e-12)

    def test_mobius_rejects_outside_parameter(self):
        with pytest.raises(BadParameter):
            mobius(1.5)

    def test_monomial_rotation_needs_unit(self):
        with pytest.raises(BadParameter):
            monomial_rotation(2, 0.5)

    def test_construct_dispatch(self):
        f = construct('koebe', unit=[0, 1, 0, 0, 0, 0, 0, 0], theta=0.0)
        assert evaluate(f, Octonion(0.3)).isclose(Octonion(0.3 / 0.49), tol=1e-12)
        worked = construct('example_3_3', unit_i=Octonion.basis(1), unit_j=Octonion.basis(2))
        twisted = construct('twisted_fixed_point', unit_i=Octonion.basis(1), unit_j=Octonion.basis(2))
        assert np.allclose(worked.num.coeffs, twisted.num.coeffs)
        assert np.allclose(worked.den, twisted.den)
        assert evaluate(worked, Octonion.basis(2)).isclose(Octonion.basis(2), tol=1e-12)

    def test_construct_unknown_family(self):
        with pytest.raises(BadParameter):
            construct('bogus')

    def test_construct_missing_parameter(self):
        with pytest.raises(BadParameter):
            construct('mobius')

    def test_koebe_needs_imaginary_unit(self):
        with pytest.raises(BadParameter):
            koebe(ONE, 0.0)

    def test_unit_imaginary_accepted_by_koebe(self, rng):
        f = koebe(sample_unit_imaginary(rng), np.pi)
        assert evaluate(f, Octonion(-0.3)).isclose(Octonion(-0.3 / 0.49), tol=1e-12)
