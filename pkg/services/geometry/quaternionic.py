"""
Boundary estimates that need associativity: quaternionic self-maps of the ball

Covers the sharp boundary Schwarz bound and its weaker consequences, the
vanishing-order refinement, Julia's inequality, the T_f transform, the
pointwise form of the regular quotient, the inner boundary estimate and
the convexity consequence.
"""

from typing import Optional, Tuple

import numpy as np

from models.geometry_models import BoundaryReport, JuliaResult, InnerEstimateResult
from models.multiplication_table import DIMENSION, table_product
from models.octonion import Octonion, ONE
from models.series_models import SliceSeries, RegularRational, SliceFunction
from services.algebra.operations import bracket, inner, inverse, imaginary_unit_of
from services.geometry.boundary import (
    require_contact_point, contact_bound, radial_difference, coefficients_in_slice
)
from services.series.evaluation import evaluate
from services.series.rational import (
    as_rational, rational_conjugate, rational_reciprocal, rational_star, rational_symmetrize,
    taylor_coefficients
)
from services.series.remainder import derivative_at, second_remainder
from utils.constants import CONTACT_TOL, VANISHING_TOL, POLE_THRESHOLD, INEQUALITY_SLACK
from utils.exceptions import NonQuaternionic, HypothesisViolated, ZeroOfSymmetrization
from utils.logging_config import setup_logging

logger = setup_logging(logger_name=__name__)

ORIGIN = Octonion(0.0)


def _require_quaternionic(function: SliceFunction, *points: Octonion) -> RegularRational:
    f = as_rational(function)
    if not f.is_quaternionic():
        raise NonQuaternionic("Coefficients must lie in H", context={'num_degree': f.num.degree})
    for point in points:
        if not point.is_quaternionic():
            raise NonQuaternionic("Point must lie in H", context={'point': point.to_list()})
    return f


def vanishing_order(function: SliceFunction) -> Tuple[int, SliceSeries]:
    """
    Order n of the zero of f at the origin and Taylor coefficients a_0..a_{n+1}.

    Raises:
        HypothesisViolated: If no coefficient up to the numerator degree is nonzero
    """
    f = as_rational(function)
    limit = f.num.degree + 2
    taylor = taylor_coefficients(f, limit)
    norms = np.linalg.norm(taylor.coeffs, axis=1)
    nonzero = np.flatnonzero(norms > VANISHING_TOL)
    if nonzero.size == 0 or nonzero[0] >= limit:
        raise HypothesisViolated("f vanishes identically near the origin")
    return int(nonzero[0]), taylor


def _sharp_denominator(first: Octonion, base: Octonion, value: Octonion, xi: Octonion) -> float:
    """Re(first (value - base)^{-1} xi (1 - base conj(value))^{-1}) + (1 - |base|^2)/|value - base|^2"""
    difference = value - base
    s = (first * inverse(difference) * xi * inverse(ONE - base * value.conj())).re
    return s + (1.0 - base.norm_squared()) / difference.norm_squared()


def quaternionic_bounds(function: SliceFunction, xi: Octonion) -> BoundaryReport:
    """
    delta = conj(xi)(f(xi) conj f'(xi) + [conj(xi), f(xi) conj R2]) and its lower bounds.

    Reports the contact bound, the sharp bound 2 / (S + (1-|f(0)|^2)/|f(xi)-f(0)|^2),
    the weak bound 2|f(xi)-f(0)|^2/(1-|f(0)|^2+|f'(0)|), the Osserman bound
    2(1-|f(0)|)^2/(1-|f(0)|^2+|f'(0)|) and, when f vanishes to order n >= 1 at
    the origin, the order-n refinement (which degenerates to n exactly for
    f = q^n u).

    Raises:
        NonQuaternionic: If f or xi leave H
        NotContactPoint: If |f(xi)| != 1
        HypothesisViolated: If a bound denominator is not positive
    """
    f = _require_quaternionic(function, xi)
    value = require_contact_point(f, xi)
    f0 = evaluate(f, ORIGIN)
    if f0.norm() >= 1.0:
        raise HypothesisViolated("f(0) must lie in the open unit ball", context={'|f(0)|': f0.norm()})
    first_at_zero = derivative_at(f, ORIGIN)
    first = derivative_at(f, xi)
    r2 = second_remainder(f, xi)
    xi_bar = xi.conj()
    raw = xi_bar * (value * first.conj() + bracket(xi_bar, value * r2.conj()))

    report = BoundaryReport(
        delta=raw.re,
        contact_bound=contact_bound(f0, value),
        imag_residual=raw.im.norm(),
        fd_crosscheck=radial_difference(f, xi),
        raw_value=raw.to_list(),
    )

    denominator = _sharp_denominator(first_at_zero, f0, value, xi)
    if denominator <= 0.0:
        raise HypothesisViolated("Sharp bound denominator must be positive", context={'denominator': denominator})
    report.sharp_bound = 2.0 / denominator
    spread = 1.0 - f0.norm_squared() + first_at_zero.norm()
    report.weak_bound = 2.0 * (value - f0).norm_squared() / spread
    report.osserman_bound = 2.0 * (1.0 - f0.norm()) ** 2 / spread

    order, taylor = vanishing_order(f)
    report.vanishing_order = order
    if order >= 1:
        _order_bounds(report, taylor, order, value, xi)
        if (value - xi).norm() <= CONTACT_TOL:
            report.fixed_point_bound = 2.0 / (1.0 + first_at_zero.re)
            report.derivative_modulus = first.norm()
            report.modulus_bound = report.fixed_point_bound

    logger.debug(f"Quaternionic bounds at {xi}: delta={report.delta:.12g}, sharp={report.sharp_bound:.12g}")
    return report


def _order_bounds(report: BoundaryReport, taylor: SliceSeries, order: int, value: Octonion, xi: Octonion):
    """Refinement for f with a zero of order n at the origin"""
    leading = taylor.coefficient(order)
    following = taylor.coefficient(order + 1)
    power = ONE
    for _ in range(order):
        power = power * xi
    remainder = value - power * leading
    if remainder.norm() <= CONTACT_TOL:
        report.order_bound = float(order)
        report.order_weak_bound = float(order)
        report.extremal = True
        return
    quotient = power.conj() * value
    denominator = _sharp_denominator(following, leading, quotient, xi)
    if denominator <= 0.0:
        raise HypothesisViolated("Order bound denominator must be positive", context={'denominator': denominator})
    report.order_bound = order + 2.0 / denominator
    report.order_weak_bound = order + 2.0 * remainder.norm_squared() / (
        1.0 - leading.norm_squared() + following.norm())


def julia_quotient(function: SliceFunction, eta: Octonion) -> RegularRational:
    """(1 - f conj(eta))^{-*} * (1 + f conj(eta)) in rational form"""
    f = as_rational(function)
    rotated = table_product(f.num.coeffs, eta.conj().components)
    length = max(rotated.shape[0], f.den.size)
    base = np.zeros((length, DIMENSION))
    base[:f.den.size, 0] = f.den
    turned = np.zeros((length, DIMENSION))
    turned[:rotated.shape[0]] = rotated
    minus = SliceSeries(base - turned)
    plus = SliceSeries(base + turned)
    return rational_star(rational_reciprocal(minus), plus)


def julia_check(function: SliceFunction, xi: Octonion, eta: Octonion, alpha: float, q: Octonion) -> JuliaResult:
    """
    Re[(1 - f conj eta)^{-*} * (1 + f conj eta)](q) >= (1/alpha) Re[(1 - q conj xi)^{-*} * (1 + q conj xi)](q)

    Raises:
        NonQuaternionic: If f or the points leave H
        PoleAtPoint: If a quotient has a pole at q
    """
    f = _require_quaternionic(function, xi, eta, q)
    if alpha <= 0.0:
        raise HypothesisViolated("alpha must be positive", context={'alpha': alpha})
    lhs = evaluate(julia_quotient(f, eta), q).re
    identity = RegularRational.from_series(SliceSeries.identity())
    rhs = evaluate(julia_quotient(identity, xi), q).re / alpha
    return JuliaResult(lhs=lhs, rhs=rhs, holds=lhs >= rhs - INEQUALITY_SLACK)


def t_transform(function: SliceFunction, q: Octonion) -> Octonion:
    """
    T_f(q) = f^c(q)^{-1} q f^c(q)

    Raises:
        ZeroOfSymmetrization: If f^s(q) = 0
    """
    f = _require_quaternionic(function, q)
    symmetric = evaluate(rational_symmetrize(f), q)
    if symmetric.norm() <= POLE_THRESHOLD:
        raise ZeroOfSymmetrization("f^s vanishes at q", context={'|f^s(q)|': symmetric.norm()})
    conjugate_value = evaluate(rational_conjugate(f), q)
    return inverse(conjugate_value) * q * conjugate_value


def quotient_check(f: SliceFunction, g: SliceFunction, q: Octonion) -> float:
    """Deviation |f^{-*} * g(q) - f(T_f(q))^{-1} g(T_f(q))|"""
    f = _require_quaternionic(f, q)
    g = _require_quaternionic(g)
    regular = evaluate(rational_star(rational_reciprocal(f), g), q)
    point = t_transform(f, q)
    pointwise = inverse(evaluate(f, point)) * evaluate(g, point)
    return (regular - pointwise).norm()


def inner_boundary_estimate(function: SliceFunction, xi: Octonion, t: float,
                            delta: Optional[float] = None, order: int = 0) -> InnerEstimateResult:
    """
    Margins of <f(t xi), f(xi)> >= ((d+1)t - (d-1)) / ((d+1) - (d-1)t) and of
    <xi^2 f''(xi), f(xi)> >= d(d-1); with order n >= 1 also of
    <f(t xi), f(xi)> >= t^n ((d-n+1)t - (d-n-1)) / ((d-n+1) - (d-n-1)t).

    Raises:
        NotContactPoint: If |f(xi)| != 1
    """
    f = _require_quaternionic(function, xi)
    value = require_contact_point(f, xi)
    if delta is None:
        delta = quaternionic_bounds(f, xi).delta
    along = inner(evaluate(f, t * xi), value)
    bound = ((delta + 1.0) * t - (delta - 1.0)) / ((delta + 1.0) - (delta - 1.0) * t)
    second = inner(xi * xi * derivative_at(f, xi, order=2), value)

    result = InnerEstimateResult(
        t=t,
        inner_margin=along - bound,
        second_derivative_margin=second - delta * (delta - 1.0),
    )
    if order >= 1:
        shifted = delta - order
        order_bound = t ** order * ((shifted + 1.0) * t - (shifted - 1.0)) / ((shifted + 1.0) - (shifted - 1.0) * t)
        result.order_margin = along - order_bound
    return result


def convexity_check(function: SliceFunction, xi: Octonion, delta: Optional[float] = None) -> float:
    """
    Re(xi f''(xi) f'(xi)^{-1}) + 1 - delta for f with coefficients in C_{I_xi}.

    Raises:
        HypothesisViolated: If the coefficients leave the slice of xi
    """
    f = as_rational(function)
    unit = imaginary_unit_of(xi)
    if not coefficients_in_slice(f, unit):
        raise HypothesisViolated("Coefficients must lie in the slice of xi")
    value = require_contact_point(f, xi)
    first = derivative_at(f, xi)
    if delta is None:
        delta = (xi.conj() * value * first.conj()).re
    ratio = derivative_at(f, xi, order=2) * inverse(first)
    return (xi * ratio).re + 1.0 - delta
