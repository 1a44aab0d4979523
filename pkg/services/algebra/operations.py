"""
Octonion operations: product, involutions, inner product, associator and inverse
"""

from typing import NamedTuple, Tuple

import numpy as np

from models.multiplication_table import table_product, conjugate_components
from models.octonion import Octonion, UnitImaginary
from utils.constants import ZERO_THRESHOLD, REAL_POINT_THRESHOLD
from utils.exceptions import ZeroDivisor


class Involutions(NamedTuple):
    conj: Octonion
    norm: float
    re: float
    im: Octonion


def mul(a: Octonion, b: Octonion) -> Octonion:
    """Table product a*b"""
    return a * b


def involutions(w: Octonion) -> Involutions:
    return Involutions(conj=w.conj(), norm=w.norm(), re=w.re, im=w.im)


def inner(z: Octonion, w: Octonion) -> float:
    """Euclidean inner product, equal to Re(z conj(w))"""
    return float(np.dot(z.components, w.components))


def associator(u: Octonion, v: Octonion, w: Octonion) -> Octonion:
    """[u, v, w] = (uv)w - u(vw)"""
    return (u * v) * w - u * (v * w)


def bracket(u: Octonion, v: Octonion) -> Octonion:
    """[u, v] = uv - vu"""
    return u * v - v * u


def wedge(i: Octonion, j: Octonion) -> Octonion:
    """I ^ J = [I, J] / 2, so that IJ = -<I, J> + I ^ J for imaginary I, J"""
    return 0.5 * bracket(i, j)


def inverse(w: Octonion) -> Octonion:
    """
    conj(w) / |w|^2

    Raises:
        ZeroDivisor: If |w| is below the zero threshold
    """
    norm = w.norm()
    if norm < ZERO_THRESHOLD:
        raise ZeroDivisor("Cannot invert a zero octonion", context={'norm': norm})
    return w.conj() / w.norm_squared()


def imaginary_unit_of(w: Octonion) -> UnitImaginary:
    """Im(w)/|Im(w)|; real points get e1"""
    imaginary = w.im
    if imaginary.norm() > REAL_POINT_THRESHOLD:
        return UnitImaginary.from_components(imaginary.components)
    return UnitImaginary.basis(1)


def slice_coordinates(w: Octonion) -> Tuple[complex, UnitImaginary]:
    """(z, I) with w = Re(z) + Im(z) I and Im(z) >= 0"""
    unit = imaginary_unit_of(w)
    return complex(w.re, w.im.norm()), unit


# Vectorized helpers on (..., 8) component arrays

def mul_components(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return table_product(a, b)


def inverse_components(a: np.ndarray) -> np.ndarray:
    """Row-wise inverse; rows of zero norm raise ZeroDivisor"""
    a = np.asarray(a, dtype=np.float64)
    norm_squared = np.sum(a * a, axis=-1, keepdims=True)
    if np.any(np.sqrt(norm_squared) < ZERO_THRESHOLD):
        raise ZeroDivisor("Cannot invert a zero octonion")
    return conjugate_components(a) / norm_squared


def associator_components(u: np.ndarray, v: np.ndarray, w: np.ndarray) -> np.ndarray:
    return table_product(table_product(u, v), w) - table_product(u, table_product(v, w))


def imaginary_units(points: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Slice coordinates of many points at once.

    Args:
        points: (M, 8) array

    Returns:
        Tuple of complex coordinates (M,) and unit imaginary rows (M, 8)
    """
    points = np.atleast_2d(np.asarray(points, dtype=np.float64))
    imaginary = points.copy()
    imaginary[:, 0] = 0.0
    moduli = np.linalg.norm(imaginary, axis=1)
    units = np.zeros_like(points)
    real_rows = moduli <= REAL_POINT_THRESHOLD
    units[~real_rows] = imaginary[~real_rows] / moduli[~real_rows, None]
    units[real_rows, 1] = 1.0
    moduli = np.where(real_rows, 0.0, moduli)
    return points[:, 0] + 1j * moduli, units
