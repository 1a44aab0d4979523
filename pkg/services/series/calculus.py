"""
Regular product, conjugate, symmetrization, reciprocal, derivatives and regular composition
"""

from typing import Optional, Union

import numpy as np

from models.multiplication_table import DIMENSION, table_product, conjugate_components
from models.octonion import Octonion
from models.series_models import SliceSeries, RegularRational
from services.algebra.operations import slice_coordinates
from utils.constants import POLE_THRESHOLD, SYMMETRIZATION_RESIDUE, UNIT_TOL
from utils.exceptions import ZeroConstantTerm, BadParameter, HypothesisViolated


def convolve_coefficients(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """c_n = sum_k a_k b_{n-k} with octonion products, full length len(a) + len(b) - 1"""
    products = table_product(a[:, None, :], b[None, :, :])
    result = np.zeros((a.shape[0] + b.shape[0] - 1, DIMENSION))
    for k in range(a.shape[0]):
        result[k:k + b.shape[0]] += products[k]
    return result


def real_convolve(real: np.ndarray, coeffs: np.ndarray) -> np.ndarray:
    """Product of a real-coefficient polynomial with an octonion-coefficient one"""
    real = np.asarray(real, dtype=np.float64).reshape(-1)
    return np.stack([np.convolve(real, coeffs[:, c]) for c in range(DIMENSION)], axis=1)


def star(f: SliceSeries, g: SliceSeries, degree: Optional[int] = None) -> SliceSeries:
    """
    Regular product f * g by coefficient convolution.

    The result has the true degree N_f + N_g unless a smaller `degree` is
    forced, in which case the truncation is recorded in the metadata.
    """
    coeffs = convolve_coefficients(f.coeffs, g.coeffs)
    full_degree = coeffs.shape[0] - 1
    if degree is not None and degree < full_degree:
        return SliceSeries(coeffs[:degree + 1], metadata={'truncated_from': full_degree})
    return SliceSeries(coeffs)


def regular_conjugate(f: SliceSeries) -> SliceSeries:
    """f^c: conjugated coefficients"""
    return SliceSeries(conjugate_components(f.coeffs))


def symmetrization_coefficients(f: SliceSeries) -> np.ndarray:
    """
    Real coefficients of f^s = f * f^c.

    The imaginary residue, relative to the largest coefficient, must stay
    below SYMMETRIZATION_RESIDUE before it is dropped.

    Raises:
        HypothesisViolated: If the residue is larger or not finite
    """
    coeffs = convolve_coefficients(f.coeffs, conjugate_components(f.coeffs))
    scale = max(1.0, float(np.max(np.abs(coeffs))))
    residue = float(np.max(np.abs(coeffs[:, 1:]))) / scale
    if not residue < SYMMETRIZATION_RESIDUE:
        raise HypothesisViolated("Symmetrization is not real", context={'residue': residue})
    return coeffs[:, 0].copy()


def symmetrize(f: SliceSeries) -> SliceSeries:
    """f^s as a series with exactly real coefficients"""
    return SliceSeries.from_real(symmetrization_coefficients(f))


def real_series_inverse(den: np.ndarray, degree: int) -> np.ndarray:
    """
    Taylor coefficients s_0..s_degree of 1/den for a real polynomial den.

    Raises:
        ZeroConstantTerm: If den(0) is numerically zero
    """
    den = np.asarray(den, dtype=np.float64).reshape(-1)
    if abs(den[0]) <= POLE_THRESHOLD:
        raise ZeroConstantTerm("Cannot expand 1/den around 0", context={'den(0)': float(den[0])})
    inverse = np.zeros(degree + 1)
    inverse[0] = 1.0 / den[0]
    for n in range(1, degree + 1):
        upper = min(n, den.size - 1)
        inverse[n] = -np.dot(den[1:upper + 1], inverse[n - upper:n][::-1]) / den[0]
    return inverse


def reciprocal(f: SliceSeries, degree: Optional[int] = None) -> Union[RegularRational, SliceSeries]:
    """
    Regular reciprocal f^{-*} = (f^s)^{-1} f^c.

    Without `degree` the exact rational form is returned; with `degree` the
    Taylor expansion up to w^degree.
    """
    if degree is None:
        return RegularRational(num=regular_conjugate(f), den=symmetrization_coefficients(f))
    return reciprocal_series(f, degree)


def reciprocal_series(f: SliceSeries, degree: int) -> SliceSeries:
    """Degree-N expansion of f^{-*}; star(result, f) = 1 + O(w^{N+1})"""
    a0 = f.coefficient(0)
    if a0.norm() <= POLE_THRESHOLD:
        raise ZeroConstantTerm("Series reciprocal needs a nonzero constant term", context={'|a0|': a0.norm()})
    inverse = real_series_inverse(symmetrization_coefficients(f), degree)
    coeffs = real_convolve(inverse, conjugate_components(f.coeffs))
    return SliceSeries(coeffs[:degree + 1])


def derivative(f: SliceSeries, order: int = 1) -> SliceSeries:
    """n-th slice derivative, term-wise"""
    if order < 0:
        raise BadParameter("Derivative order must be nonnegative", context={'order': order})
    coeffs = np.array(f.coeffs)
    for _ in range(order):
        if coeffs.shape[0] == 1:
            return SliceSeries(np.zeros((1, DIMENSION)))
        coeffs = coeffs[1:] * np.arange(1, coeffs.shape[0])[:, None]
    return SliceSeries(coeffs)


def unit_powers(u: Octonion, degree: int) -> np.ndarray:
    """Rows u^0..u^degree, computed inside the plane of u"""
    z, unit = slice_coordinates(u)
    powers = z ** np.arange(degree + 1)
    return powers.real[:, None] * np.eye(DIMENSION)[0] + powers.imag[:, None] * unit.components


def compose_with_unit(f: SliceSeries, u: Octonion) -> SliceSeries:
    """Regular composition f_u with coefficients u^n a_n, |u| <= 1"""
    if u.norm() > 1.0 + UNIT_TOL:
        raise BadParameter("Regular composition needs |u| <= 1", context={'|u|': u.norm()})
    return SliceSeries(table_product(unit_powers(u, f.degree), f.coeffs))
