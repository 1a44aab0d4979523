"""
Remainder operators, sphere derivative and directional derivatives

R_xi f is the slice regular quotient with f(w) - f(xi) = (w - xi) * R_xi f(w),
obtained by synthetic division with the point multiplied from the left.
"""

import numpy as np

from models.multiplication_table import DIMENSION, table_product
from models.octonion import Octonion
from models.series_models import SliceSeries, RegularRational, SliceFunction
from services.algebra.operations import inverse
from services.series.evaluation import evaluate
from services.series.calculus import derivative, real_convolve
from services.series.rational import rational_derivative
from utils.constants import (
    REAL_POINT_THRESHOLD, SERIES_TOL, UNIT_TOL, DIRECTIONAL_FD_STEP
)
from utils.exceptions import RealPoint, BadParameter
from utils.logging_config import setup_logging

logger = setup_logging(logger_name=__name__)


def synthetic_division(coeffs: np.ndarray, xi: Octonion) -> np.ndarray:
    """
    Quotient coefficients b_0..b_{N-1} with b_{N-1} = a_N and b_{n-1} = a_n + xi b_n.

    Args:
        coeffs: (N+1, 8) coefficients a_0..a_N
        xi: Division point

    Returns:
        (max(N, 1), 8) quotient coefficients
    """
    degree = coeffs.shape[0] - 1
    if degree == 0:
        return np.zeros((1, DIMENSION))
    quotient = np.zeros((degree, DIMENSION))
    quotient[degree - 1] = coeffs[degree]
    for n in range(degree - 1, 0, -1):
        quotient[n - 1] = coeffs[n] + table_product(xi.components, quotient[n])
    return quotient


def remainder(function: SliceFunction, xi: Octonion) -> SliceFunction:
    """
    R_xi f for a series or a rational.

    For a rational D^{-1} N the numerator N - D f(xi) vanishes at xi and is
    divided instead; the denominator is kept.

    Raises:
        PoleAtPoint: If a rational has a pole at xi
    """
    value = evaluate(function, xi)
    if isinstance(function, RegularRational):
        shifted = real_convolve(function.den, value.components[None, :])
        length = max(shifted.shape[0], function.num.coeffs.shape[0])
        numerator = np.zeros((length, DIMENSION))
        numerator[:function.num.coeffs.shape[0]] += function.num.coeffs
        numerator[:shifted.shape[0]] -= shifted
        quotient = synthetic_division(numerator, xi)
        _check_residual(numerator[0], Octonion(0.0), xi, quotient)
        return RegularRational(num=SliceSeries(quotient), den=function.den)

    quotient = synthetic_division(function.coeffs, xi)
    _check_residual(function.coeffs[0], value, xi, quotient)
    return SliceSeries(quotient)


def _check_residual(a0: np.ndarray, value: Octonion, xi: Octonion, quotient: np.ndarray):
    """a_0 - f(xi) + xi b_0 should vanish"""
    residual = a0 - value.components + table_product(xi.components, quotient[0])
    scale = max(1.0, float(np.max(np.abs(quotient))))
    size = float(np.max(np.abs(residual))) / scale
    if size > SERIES_TOL:
        logger.warning(f"Remainder residual {size:.3e} exceeds tolerance at xi={xi}")


def sphere_derivative(function: SliceFunction, xi: Octonion) -> Octonion:
    """
    (2 Im xi)^{-1} (f(xi) - f(conj xi))

    Raises:
        RealPoint: If xi is real
    """
    imaginary = xi.im
    if imaginary.norm() < REAL_POINT_THRESHOLD:
        raise RealPoint("Sphere derivative is undefined at a real point", context={'|Im xi|': imaginary.norm()})
    difference = evaluate(function, xi) - evaluate(function, xi.conj())
    return inverse(2.0 * imaginary) * difference


def spherical_value(function: SliceFunction, xi: Octonion) -> Octonion:
    """R_xi f(conj xi); equals the sphere derivative off the real axis and f'(xi) on it"""
    return evaluate(remainder(function, xi), xi.conj())


def second_remainder(function: SliceFunction, xi: Octonion) -> Octonion:
    """R_{conj xi} R_xi f evaluated at xi"""
    return evaluate(remainder(remainder(function, xi), xi.conj()), xi)


def slice_derivative(function: SliceFunction, order: int = 1) -> SliceFunction:
    if isinstance(function, RegularRational):
        return rational_derivative(function, order)
    return derivative(function, order)


def derivative_at(function: SliceFunction, xi: Octonion, order: int = 1) -> Octonion:
    return evaluate(slice_derivative(function, order), xi)


def directional_derivative(function: SliceFunction, xi: Octonion, v: Octonion) -> Octonion:
    """
    Derivative of f along the unit direction v at xi:
    v A_1 + (xi v - v conj(xi)) A_2 with A_1 = R_xi f(conj xi), A_2 = R_{conj xi} R_xi f(xi).
    """
    if abs(v.norm() - 1.0) > UNIT_TOL:
        raise BadParameter("Direction must be a unit octonion", context={'|v|': v.norm()})
    first = spherical_value(function, xi)
    second = second_remainder(function, xi)
    return v * first + (xi * v - v * xi.conj()) * second


def directional_derivative_fd(function: SliceFunction, xi: Octonion, v: Octonion,
                              step: float = DIRECTIONAL_FD_STEP) -> Octonion:
    """Central difference of t -> f(xi + t v)"""
    forward = evaluate(function, xi + step * v)
    backward = evaluate(function, xi - step * v)
    return (forward - backward) / (2.0 * step)
