"""
Tests for octonion operations and sampling
"""

import numpy as np
import pytest

from models.octonion import Octonion, UnitImaginary, Frame
from services.algebra.operations import (
    associator, bracket, wedge, inner, slice_coordinates, imaginary_unit_of, mul, involutions,
    associator_components, mul_components
)
from services.algebra.sampling import (
    sample, sample_components, sample_unit_imaginary, random_frame, direction_set, random_unit
)
from utils.exceptions import BadParameter

pytestmark = pytest.mark.unit


def _relative(difference: Octonion, scale: float) -> float:
    return difference.norm() / scale


class TestIdentities:
    """Weak associativity laws on random samples"""

    def test_moufang(self, rng):
        for _ in range(100):
            x, y, z = (sample(rng, 'algebra') for _ in range(3))
            scale = x.norm() * y.norm() * z.norm() ** 2
            assert _relative(z * (x * (z * y)) - ((z * x) * z) * y, scale) < 1e-10

    def test_alternativity(self, rng):
        for _ in range(100):
            x, y = sample(rng, 'algebra'), sample(rng, 'algebra')
            scale = x.norm() ** 2 * y.norm()
            assert _relative(associator(x, x, y), scale) < 1e-10
            assert _relative(associator(y, x, x), scale) < 1e-10

    def test_associator_is_imaginary(self, rng):
        x, y, z = (sample(rng, 'algebra') for _ in range(3))
        assert abs(associator(x, y, z).re) < 1e-12 * x.norm() * y.norm() * z.norm()

    def test_vectorized_associator_matches_scalar(self, rng):
        x, y, z = (sample_components(rng, 'algebra', 5) for _ in range(3))
        batched = associator_components(x, y, z)
        for k in range(5):
            scalar = associator(Octonion(x[k]), Octonion(y[k]), Octonion(z[k]))
            assert np.allclose(batched[k], scalar.components, atol=1e-12)

    def test_quaternions_associate(self, rng):
        x, y, z = (sample(rng, 'quaternion-ball') for _ in range(3))
        assert associator(x, y, z).norm() < 1e-14


def test_wedge_relation(rng):
    unit_i, unit_j = sample_unit_imaginary(rng).value, sample_unit_imaginary(rng).value
    assert (unit_i * unit_j).isclose(-inner(unit_i, unit_j) + wedge(unit_i, unit_j), tol=1e-12)


def test_bracket_vanishes_for_reals(rng):
    assert bracket(Octonion(3.0), sample(rng, 'algebra')).norm() == 0.0


def test_inner_is_real_part_of_product_with_conjugate(rng):
    z, w = sample(rng, 'algebra'), sample(rng, 'algebra')
    assert inner(z, w) == pytest.approx((z * w.conj()).re, abs=1e-12)


def test_mul_components_broadcasts(rng):
    a = sample_components(rng, 'algebra', 4)
    b = sample_components(rng, 'algebra', 1)
    assert mul_components(a, b).shape == (4, 8)


class TestSliceCoordinates:

    def test_imaginary_point(self):
        point = Octonion([0.5, 0.0, 0.0, 0.3, 0.4, 0.0, 0.0, 0.0])
        z, unit = slice_coordinates(point)
        assert z == pytest.approx(complex(0.5, 0.5))
        assert unit.to_list() == pytest.approx([0.0, 0.0, 0.0, 0.6, 0.8, 0.0, 0.0, 0.0])

    def test_real_point_uses_e1(self):
        z, unit = slice_coordinates(Octonion(-0.7))
        assert z == complex(-0.7, 0.0)
        assert unit.value == Octonion.basis(1)
        assert imaginary_unit_of(Octonion(2.0)).value == Octonion.basis(1)


class TestSampling:

    def test_targets(self, rng):
        ball = sample_components(rng, 'ball', 200)
        assert np.all(np.linalg.norm(ball, axis=1) < 1.0)
        sphere = sample_components(rng, 'sphere', 200)
        assert np.allclose(np.linalg.norm(sphere, axis=1), 1.0)
        units = sample_components(rng, 'unit-imaginary', 200)
        assert np.all(units[:, 0] == 0.0)
        assert np.allclose(np.linalg.norm(units, axis=1), 1.0)
        quaternions = sample_components(rng, 'quaternion-ball', 200)
        assert np.all(quaternions[:, 4:] == 0.0)

    def test_unknown_target(self, rng):
        with pytest.raises(BadParameter):
            sample(rng, 'cube')

    def test_same_seed_same_draws(self):
        first = sample(np.random.Generator(np.random.Philox(5)), 'ball')
        second = sample(np.random.Generator(np.random.Philox(5)), 'ball')
        assert first == second

    def test_random_unit(self, rng):
        assert random_unit(rng).norm() == pytest.approx(1.0)
        quaternionic = random_unit(rng, quaternionic=True)
        assert quaternionic.is_quaternionic()
        imaginary = random_unit(rng, imaginary=True)
        assert imaginary.re == 0.0

    def test_random_frame(self, rng):
        frame = random_frame(rng)
        assert isinstance(frame, Frame)
        assert abs(inner(frame.I.value, frame.J.value)) < 1e-12
        assert isinstance(frame.K, UnitImaginary)

    def test_direction_set(self, rng):
        directions = direction_set(rng, 64)
        assert directions.shape == (64 + 16, 8)
        assert np.allclose(np.linalg.norm(directions, axis=1), 1.0)
        quaternionic = direction_set(rng, 32, quaternionic=True)
        assert quaternionic.shape == (32 + 8, 8)
        assert np.all(quaternionic[:, 4:] == 0.0)


class TestProductAndInvolutions:

    @pytest.mark.parametrize("left, right, expected", [(1, 2, 3), (6, 1, 7), (1, 4, 5), (3, 4, 7)])
    def test_table_products(self, left, right, expected):
        assert mul(Octonion.basis(left), Octonion.basis(right)) == Octonion.basis(expected)

    def test_involutions(self):
        w = 2.0 + Octonion.basis(3)
        parts = involutions(w)
        assert parts.conj == 2.0 - Octonion.basis(3)
        assert parts.norm == pytest.approx(np.sqrt(5.0))
        assert parts.re == 2.0
        assert parts.im == Octonion.basis(3)
