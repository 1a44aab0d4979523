"""
Pointwise evaluation of slice series and regular rationals

A point w = x + yI is handled inside its plane C_I: with z = x + iy the
complex 8-vector gamma = sum z^n a_n is computed by Horner's scheme and
f(w) = Re(gamma) + I * Im(gamma). Rationals divide gamma by the complex
value of their real denominator.
"""

from typing import Union

import numpy as np
from numpy.polynomial import polynomial as P

from models.multiplication_table import table_product
from models.octonion import Octonion, UnitImaginary
from models.series_models import SliceSeries, RegularRational, SliceFunction
from services.algebra.operations import slice_coordinates, imaginary_units
from utils.constants import POLE_THRESHOLD
from utils.exceptions import PoleAtPoint, BadParameter


def _numerator(function: SliceFunction) -> np.ndarray:
    if isinstance(function, RegularRational):
        return function.num.coeffs
    if isinstance(function, SliceSeries):
        return function.coeffs
    raise BadParameter("Expected a SliceSeries or RegularRational", context={'type': type(function).__name__})


def slice_vector(function: SliceFunction, z: Union[complex, np.ndarray]) -> np.ndarray:
    """
    Complex 8-vector(s) gamma with f(x + yI) = Re(gamma) + I Im(gamma).

    Args:
        function: Series or rational
        z: Complex coordinate(s) in the slice

    Returns:
        (8,) array for scalar z, (M, 8) for an array of M points

    Raises:
        PoleAtPoint: If the denominator nearly vanishes at some z
    """
    z_array = np.asarray(z, dtype=np.complex128)
    gamma = P.polyval(z_array, _numerator(function))
    if isinstance(function, RegularRational):
        den = P.polyval(z_array, function.den)
        smallest = float(np.min(np.abs(den)))
        if smallest < POLE_THRESHOLD:
            raise PoleAtPoint("Denominator vanishes at the evaluation point", context={'|den|': smallest})
        gamma = gamma / den
    if z_array.ndim == 0:
        return gamma
    return np.moveaxis(gamma, 0, -1)


def embed(gamma: np.ndarray, unit: np.ndarray) -> np.ndarray:
    """Re(gamma) + unit * Im(gamma) on (..., 8) arrays"""
    return gamma.real + table_product(unit, gamma.imag)


def evaluate(function: SliceFunction, w: Octonion) -> Octonion:
    """f(w) for a single point"""
    z, unit = slice_coordinates(w)
    return Octonion(embed(slice_vector(function, z), unit.components))


def evaluate_many(function: SliceFunction, points: np.ndarray) -> np.ndarray:
    """f at many points given as an (M, 8) array"""
    z, units = imaginary_units(points)
    return embed(slice_vector(function, z), units)


def evaluate_in_slice(function: SliceFunction, z: np.ndarray, unit: UnitImaginary) -> np.ndarray:
    """f at the points Re(z) + Im(z) I of one slice, as an (M, 8) array"""
    z = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    return embed(slice_vector(function, z), unit.components)
