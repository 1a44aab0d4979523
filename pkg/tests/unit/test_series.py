"""
Tests for series evaluation, the regular product and its companions
"""

import numpy as np
import pytest

from models.octonion import Octonion, ONE
from models.series_models import SliceSeries, RegularRational
from services.algebra.sampling import sample, sample_unit_imaginary
from services.series import (
    evaluate, evaluate_in_slice, star, regular_conjugate, symmetrize, reciprocal, reciprocal_series,
    derivative, splitting_star, split, recombine, representation_eval, compose_with_unit
)
from services.series.constructors import random_series, random_invertible_series
from services.series.evaluation import slice_vector
from services.series.rational import rational_star
from utils.exceptions import PoleAtPoint, ZeroConstantTerm, BadParameter, HypothesisViolated

pytestmark = pytest.mark.unit


class TestSliceSeries:

    def test_shape_validation(self):
        with pytest.raises(BadParameter):
            SliceSeries(np.zeros((2, 7)))
        with pytest.raises(BadParameter):
            SliceSeries(np.zeros((0, 8)))

    def test_single_row_is_promoted(self):
        assert SliceSeries(np.ones(8)).degree == 0

    def test_monomial(self):
        series = SliceSeries.monomial(3, Octonion.basis(2))
        assert series.degree == 3
        assert series.coefficient(3) == Octonion.basis(2)
        assert series.coefficient(0) == Octonion(0.0)

    def test_declared_degree_must_match(self):
        with pytest.raises(BadParameter):
            SliceSeries.from_dict({'coeffs': [[1.0] + [0.0] * 7], 'degree': 2})

    def test_zero_denominator_rejected(self):
        with pytest.raises(BadParameter):
            RegularRational(num=SliceSeries.constant(1.0), den=np.zeros(2))


class TestEvaluation:

    def test_identity(self, rng):
        w = sample(rng, 'ball')
        assert evaluate(SliceSeries.identity(), w).isclose(w, tol=1e-15)

    def test_square_on_imaginary_unit(self):
        square = SliceSeries.monomial(2)
        assert evaluate(square, Octonion.basis(6)).isclose(Octonion(-1.0), tol=1e-15)

    def test_right_coefficients(self):
        # w a with w = e1, a = e2 gives e1 e2, not e2 e1
        e1, e2 = Octonion.basis(1), Octonion.basis(2)
        assert evaluate(SliceSeries.monomial(1, e2), e1) == e1 * e2

    def test_pole(self):
        f = RegularRational(num=SliceSeries.constant(1.0), den=np.array([1.0, -1.0]))
        with pytest.raises(PoleAtPoint):
            evaluate(f, ONE)
        assert evaluate(f, Octonion(0.5)).isclose(Octonion(2.0), tol=1e-14)

    def test_slice_vector_shapes(self, rng):
        f = random_series(rng, 4)
        assert slice_vector(f, 0.3 + 0.1j).shape == (8,)
        assert slice_vector(f, np.array([0.1, 0.2j, -0.3])).shape == (3, 8)

    def test_evaluate_in_slice_matches_pointwise(self, rng):
        f = random_series(rng, 5)
        unit = sample_unit_imaginary(rng)
        z = np.array([0.2 + 0.3j, -0.5 - 0.1j])
        values = evaluate_in_slice(f, z, unit)
        for k in range(2):
            expected = evaluate(f, Octonion.from_slice(complex(z[k]), unit.value))
            assert np.allclose(values[k], expected.components, atol=1e-14)


class TestRegularProduct:

    def test_degree_adds(self, rng):
        assert star(random_series(rng, 3), random_series(rng, 5)).degree == 8

    def test_forced_truncation_is_recorded(self, rng):
        product = star(random_series(rng, 3), random_series(rng, 3), degree=4)
        assert product.degree == 4
        assert product.metadata['truncated_from'] == 6

    def test_identity_squared(self):
        product = star(SliceSeries.identity(), SliceSeries.identity())
        assert product.coefficient(2) == ONE

    def test_real_point_agreement(self, rng):
        f, g = random_series(rng, 6), random_series(rng, 6)
        x = Octonion(0.4)
        assert evaluate(star(f, g), x).isclose(evaluate(f, x) * evaluate(g, x), tol=1e-12)

    def test_conjugate_of_product(self, rng):
        f, g = random_series(rng, 5), random_series(rng, 5)
        left = regular_conjugate(star(f, g)).coeffs
        right = star(regular_conjugate(g), regular_conjugate(f)).coeffs
        assert np.allclose(left, right, atol=1e-12)

    def test_symmetrization_is_real(self, rng):
        f = random_series(rng, 6)
        symmetric = symmetrize(f)
        assert symmetric.is_real()
        assert np.allclose(symmetric.coeffs, symmetrize(regular_conjugate(f)).coeffs, atol=1e-12)

    def test_symmetrization_residue_is_relative(self, rng):
        f = SliceSeries(random_series(rng, 6).coeffs * 1e6)
        assert symmetrize(f).is_real()

    def test_symmetrization_with_imaginary_residue_raises(self, rng, mocker):
        f = random_series(rng, 3)
        corrupted = np.zeros((7, 8))
        corrupted[:, 0] = 1.0
        corrupted[2, 5] = 1e-6
        mocker.patch("services.series.calculus.convolve_coefficients", return_value=corrupted)
        with pytest.raises(HypothesisViolated):
            symmetrize(f)

    def test_splitting_matches_convolution(self, rng, frame):
        f, g = random_series(rng, 6), random_series(rng, 6)
        z = 0.8 * np.exp(2j * np.pi * rng.random(5))
        expected = evaluate_in_slice(star(f, g), z, frame.I)
        assert np.allclose(splitting_star(f, g, frame, z), expected, atol=1e-10)

    def test_split_recombine(self, rng, frame):
        f = random_series(rng, 5)
        z = np.array([0.3 - 0.2j, 0.1j])
        assert np.allclose(recombine(split(f, frame), z), evaluate_in_slice(f, z, frame.I), atol=1e-12)


class TestReciprocal:

    def test_series_reciprocal_is_left_inverse(self, rng):
        f = random_invertible_series(rng, 6)
        inverse = reciprocal_series(f, 12)
        product = star(inverse, f).coeffs[:13]
        expected = np.zeros_like(product)
        expected[0, 0] = 1.0
        assert np.allclose(product, expected, atol=1e-10)

    def test_zero_constant_term(self):
        with pytest.raises(ZeroConstantTerm):
            reciprocal_series(SliceSeries.identity(), 5)

    def test_exact_reciprocal(self, rng):
        f = random_invertible_series(rng, 4)
        exact = reciprocal(f)
        assert isinstance(exact, RegularRational)
        w = 0.5 * sample(rng, 'ball')
        assert evaluate(rational_star(exact, f), w).isclose(ONE, tol=1e-10)


def test_derivative():
    f = SliceSeries.from_real([1.0, 2.0, 3.0])
    assert np.allclose(derivative(f).coeffs[:, 0], [2.0, 6.0])
    assert np.allclose(derivative(f, order=2).coeffs[:, 0], [6.0])


def test_representation_formula(rng):
    f = random_series(rng, 8)
    unit_i, unit_j = sample_unit_imaginary(rng), sample_unit_imaginary(rng)
    x, y = 0.3, 0.5
    direct = evaluate(f, Octonion.from_slice(complex(x, y), unit_j.value))
    assert representation_eval(f, x, y, unit_i, unit_j).isclose(direct, tol=1e-12)


def test_slice_preserving_series_commute_under_star(rng):
    real = SliceSeries.from_real(rng.standard_normal(4))
    f = random_series(rng, 4)
    assert np.allclose(star(real, f).coeffs, star(f, real).coeffs, atol=1e-14)



class TestComposeWithUnit:

    def test_real_coefficients_follow_the_point(self):
        f = SliceSeries.from_real([1.0, 2.0, 3.0])
        u = 0.5 * Octonion.basis(3)
        composed = compose_with_unit(f, u)
        assert evaluate(composed, Octonion(0.8)).isclose(evaluate(f, 0.8 * u), tol=1e-12)

    def test_needs_closed_unit_ball(self):
        with pytest.raises(BadParameter):
            compose_with_unit(SliceSeries.identity(), 2.0 * ONE)
