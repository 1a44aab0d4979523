"""
Calculus on regular rationals den(w)^{-1} num(w)

The denominator has real coefficients, so it commutes through the regular
product and every operation below reduces to polynomial arithmetic on the
numerator plus real polynomial arithmetic on the denominator.
"""

from typing import Union

import numpy as np

from models.multiplication_table import DIMENSION, table_product, conjugate_components
from models.octonion import Octonion
from models.series_models import SliceSeries, RegularRational, SliceFunction
from services.series.calculus import (
    convolve_coefficients, real_convolve, symmetrization_coefficients, real_series_inverse
)


def as_rational(function: SliceFunction) -> RegularRational:
    if isinstance(function, RegularRational):
        return function
    return RegularRational.from_series(function)


def trim(function: RegularRational) -> RegularRational:
    """Drop exact trailing zeros of numerator and denominator"""
    num = function.num.coeffs
    keep = num.shape[0]
    while keep > 1 and not np.any(num[keep - 1]):
        keep -= 1
    den = function.den
    den_keep = den.size
    while den_keep > 1 and den[den_keep - 1] == 0.0:
        den_keep -= 1
    return RegularRational(num=SliceSeries(num[:keep]), den=den[:den_keep])


def _pad_rows(coeffs: np.ndarray, length: int) -> np.ndarray:
    rows = np.zeros((length, DIMENSION))
    rows[:coeffs.shape[0]] = coeffs
    return rows


def rational_star(f: SliceFunction, g: SliceFunction) -> RegularRational:
    """(D1^{-1} N1) * (D2^{-1} N2) = (D1 D2)^{-1} (N1 * N2)"""
    f, g = as_rational(f), as_rational(g)
    num = convolve_coefficients(f.num.coeffs, g.num.coeffs)
    return trim(RegularRational(num=SliceSeries(num), den=np.convolve(f.den, g.den)))


def rational_add(f: SliceFunction, g: SliceFunction) -> RegularRational:
    f, g = as_rational(f), as_rational(g)
    if f.den.size == g.den.size and np.array_equal(f.den, g.den):
        length = max(f.num.degree, g.num.degree) + 1
        num = _pad_rows(f.num.coeffs, length) + _pad_rows(g.num.coeffs, length)
        return trim(RegularRational(num=SliceSeries(num), den=f.den))
    left = real_convolve(g.den, f.num.coeffs)
    right = real_convolve(f.den, g.num.coeffs)
    length = max(left.shape[0], right.shape[0])
    num = _pad_rows(left, length) + _pad_rows(right, length)
    return trim(RegularRational(num=SliceSeries(num), den=np.convolve(f.den, g.den)))


def rational_scale(f: SliceFunction, c: Union[Octonion, float], side: str = 'right') -> RegularRational:
    """f * c (side='right') or c * f (side='left') for a constant c"""
    f = as_rational(f)
    c = c if isinstance(c, Octonion) else Octonion(c)
    if side == 'right':
        num = table_product(f.num.coeffs, c.components)
    else:
        num = table_product(c.components, f.num.coeffs)
    return RegularRational(num=SliceSeries(num), den=f.den)


def rational_conjugate(f: SliceFunction) -> RegularRational:
    f = as_rational(f)
    return RegularRational(num=SliceSeries(conjugate_components(f.num.coeffs)), den=f.den)


def rational_symmetrize(f: SliceFunction) -> RegularRational:
    """f^s = D^{-2} N^s, real coefficients"""
    f = as_rational(f)
    num = SliceSeries.from_real(symmetrization_coefficients(f.num))
    return trim(RegularRational(num=num, den=np.convolve(f.den, f.den)))


def rational_reciprocal(f: SliceFunction) -> RegularRational:
    """(D^{-1} N)^{-*} = (N^s)^{-1} D N^c"""
    f = as_rational(f)
    num = real_convolve(f.den, conjugate_components(f.num.coeffs))
    return trim(RegularRational(num=SliceSeries(num), den=symmetrization_coefficients(f.num)))


def rational_derivative(f: SliceFunction, order: int = 1) -> RegularRational:
    """Quotient rule (D N' - D' N) / D^2, iterated"""
    result = as_rational(f)
    for _ in range(order):
        num, den = result.num.coeffs, result.den
        if num.shape[0] == 1 and den.size == 1:
            return RegularRational(num=SliceSeries(np.zeros((1, DIMENSION))), den=np.ones(1))
        num_prime = num[1:] * np.arange(1, num.shape[0])[:, None] if num.shape[0] > 1 else np.zeros((1, DIMENSION))
        den_prime = den[1:] * np.arange(1, den.size) if den.size > 1 else np.zeros(1)
        left = real_convolve(den, num_prime)
        right = real_convolve(den_prime, num)
        length = max(left.shape[0], right.shape[0])
        new_num = _pad_rows(left, length) - _pad_rows(right, length)
        result = trim(RegularRational(num=SliceSeries(new_num), den=np.convolve(den, den)))
    return result


def shift(f: SliceFunction, power: int = 1) -> RegularRational:
    """w^power * f"""
    f = as_rational(f)
    num = np.vstack([np.zeros((power, DIMENSION)), f.num.coeffs])
    return RegularRational(num=SliceSeries(num), den=f.den)


def taylor_coefficients(f: SliceFunction, degree: int) -> SliceSeries:
    """Taylor expansion at 0 up to w^degree"""
    f = as_rational(f)
    inverse = real_series_inverse(f.den, degree)
    coeffs = real_convolve(inverse, f.num.coeffs)
    return SliceSeries(_pad_rows(coeffs[:degree + 1], degree + 1))


def cancel_common_power(f: SliceFunction) -> RegularRational:
    """Divide numerator and denominator by the largest w^k dividing both exactly"""
    f = as_rational(f)
    num, den = f.num.coeffs, f.den
    k = 0
    while k < num.shape[0] - 1 and k < den.size - 1 and not np.any(num[k]) and den[k] == 0.0:
        k += 1
    if k == 0:
        return f
    return RegularRational(num=SliceSeries(num[k:]), den=den[k:])
