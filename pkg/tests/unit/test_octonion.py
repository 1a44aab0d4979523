"""
Tests for the octonion value types
"""

import numpy as np
import pytest

from models.octonion import Octonion, UnitImaginary, Frame, ONE
from services.algebra.cayley_dickson import cayley_dickson_mul
from services.algebra.operations import inverse
from services.algebra.sampling import sample
from utils.exceptions import BadParameter, BadFrame, ZeroDivisor

pytestmark = pytest.mark.unit


def test_basis_products_match_cayley_dickson():
    for a in range(8):
        for b in range(8):
            left, right = Octonion.basis(a), Octonion.basis(b)
            assert left * right == cayley_dickson_mul(left, right), (a, b)


@pytest.mark.parametrize("index", range(1, 8))
def test_imaginary_basis_squares_to_minus_one(index):
    e = Octonion.basis(index)
    assert e * e == Octonion(-1.0)


def test_product_is_not_associative_on_basis():
    e1, e2, e4 = Octonion.basis(1), Octonion.basis(2), Octonion.basis(4)
    assert (e1 * e2) * e4 == -(e1 * (e2 * e4))


def test_norm_is_multiplicative(rng):
    for _ in range(50):
        z, w = sample(rng, 'algebra'), sample(rng, 'algebra')
        assert (z * w).norm() == pytest.approx(z.norm() * w.norm(), rel=1e-12)


def test_conjugate_reverses_products(rng):
    z, w = sample(rng, 'algebra'), sample(rng, 'algebra')
    assert (z * w).conj().isclose(w.conj() * z.conj(), tol=1e-12)


def test_inverse(rng):
    w = sample(rng, 'algebra')
    assert (w * inverse(w)).isclose(ONE, tol=1e-12)
    assert (inverse(w) * w).isclose(ONE, tol=1e-12)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisor):
        inverse(Octonion(0.0))


def test_real_scalars_embed():
    value = Octonion(2.5)
    assert value.re == 2.5
    assert value.is_real()
    assert (3.0 * value).re == 7.5
    assert (value + 1).re == 3.5
    assert (1 - value).re == -1.5


@pytest.mark.parametrize("components", [[1.0, 2.0], [0.0] * 9, [float('nan')] + [0.0] * 7])
def test_invalid_components_raise(components):
    with pytest.raises(BadParameter):
        Octonion(components)


def test_components_are_read_only():
    value = Octonion.basis(3)
    with pytest.raises(ValueError):
        value.components[0] = 1.0


def test_from_slice():
    e5 = Octonion.basis(5)
    point = Octonion.from_slice(complex(0.25, -0.5), e5)
    assert point.to_list() == [0.25, 0.0, 0.0, 0.0, 0.0, -0.5, 0.0, 0.0]


def test_unit_imaginary_validation():
    with pytest.raises(BadParameter):
        UnitImaginary(Octonion(1.0))
    with pytest.raises(BadParameter):
        UnitImaginary(2.0 * Octonion.basis(1))
    unit = UnitImaginary.from_components([3.0, 0.0, 3.0, 0.0, 4.0, 0.0, 0.0, 0.0])
    assert unit.to_list() == pytest.approx([0.0, 0.0, 0.6, 0.0, 0.8, 0.0, 0.0, 0.0])


def test_frame_basis_is_orthonormal(frame):
    basis = np.vstack([b.components for b in frame.basis()])
    assert np.allclose(basis @ basis.T, np.eye(8), atol=1e-12)


def test_frame_rejects_dependent_units():
    e1, e4 = UnitImaginary.basis(1), UnitImaginary.basis(4)
    with pytest.raises(BadFrame):
        Frame(e1, e1, e4)


def test_frame_dict_round_trip(frame):
    restored = Frame.from_dict(frame.to_dict())
    assert restored.I.value == frame.I.value
    assert restored.K.value == frame.K.value
