"""
Boundary Schwarz quantities for octonionic self-maps of the unit ball

At a contact point xi (|xi| = 1, |f(xi)| = 1) the outward derivative of |f|
along xi is the real number

    conj(xi) (f(xi) conj f'(xi) + [conj(xi), f(xi) conj R2] + 2 [xi, f(xi), R2])

with R2 = R_{conj xi} R_xi f(xi). Every quantity here is evaluated through
the rational form; series are never evaluated on the boundary.
"""

import numpy as np

from models.geometry_models import BoundaryReport
from models.octonion import Octonion, UnitImaginary
from models.series_models import SliceFunction
from services.algebra.operations import associator, bracket, inner
from services.series.evaluation import evaluate, evaluate_in_slice
from services.series.rational import as_rational
from services.series.remainder import derivative_at, second_remainder
from utils.constants import CONTACT_TOL, FD_STEP, VANISHING_TOL, UNIT_TOL
from utils.exceptions import NotContactPoint, BadParameter, HypothesisViolated
from utils.logging_config import setup_logging

logger = setup_logging(logger_name=__name__)


def require_contact_point(function: SliceFunction, xi: Octonion) -> Octonion:
    """
    Return f(xi) after checking |xi| = 1 and |f(xi)| = 1.

    Raises:
        BadParameter: If xi is not on the unit sphere
        NotContactPoint: If |f(xi)| differs from 1 by more than CONTACT_TOL
    """
    if abs(xi.norm() - 1.0) > CONTACT_TOL:
        raise BadParameter("Boundary point must have modulus 1", context={'|xi|': xi.norm()})
    value = evaluate(function, xi)
    if abs(value.norm() - 1.0) > CONTACT_TOL:
        raise NotContactPoint("f does not map xi to the unit sphere", context={'|f(xi)|': value.norm()})
    return value


def contact_bound(f0: Octonion, value: Octonion) -> float:
    """|1 - <f(0), f(xi)>|^2 / (1 - |f(0)|^2)"""
    return abs(1.0 - inner(f0, value)) ** 2 / (1.0 - f0.norm_squared())


def radial_difference(function: SliceFunction, xi: Octonion, step: float = FD_STEP) -> float:
    """One-sided difference (|f(xi)| - |f(t xi)|) / (1 - t) with t = 1 - step"""
    t = 1.0 - step
    return (evaluate(function, xi).norm() - evaluate(function, t * xi).norm()) / step


def boundary_modulus_derivative(function: SliceFunction, xi: Octonion) -> BoundaryReport:
    """
    Derivative of |f| along xi at a contact point, with its lower bounds.

    Args:
        function: Self-map of the unit ball
        xi: Unit octonion with |f(xi)| = 1

    Returns:
        BoundaryReport with delta, contact_bound, imag_residual, fd_crosscheck and,
        for boundary fixed points of maps with f(0) = 0, fixed_point_bound

    Raises:
        NotContactPoint: If |f(xi)| != 1
        PoleAtPoint: If the rational has a pole at xi
    """
    f = as_rational(function)
    value = require_contact_point(f, xi)
    f0 = evaluate(f, Octonion(0.0))
    if f0.norm() >= 1.0:
        raise HypothesisViolated("f(0) must lie in the open unit ball", context={'|f(0)|': f0.norm()})

    first = derivative_at(f, xi)
    r2 = second_remainder(f, xi)
    xi_bar = xi.conj()
    raw = xi_bar * (value * first.conj()
                    + bracket(xi_bar, value * r2.conj())
                    + 2.0 * associator(xi, value, r2))

    report = BoundaryReport(
        delta=raw.re,
        contact_bound=contact_bound(f0, value),
        imag_residual=raw.im.norm(),
        fd_crosscheck=radial_difference(f, xi),
        raw_value=raw.to_list(),
    )
    if f0.norm() <= VANISHING_TOL and (value - xi).norm() <= CONTACT_TOL:
        report.fixed_point_bound = 2.0 / (1.0 + derivative_at(f, Octonion(0.0)).re)
    logger.debug(f"Boundary derivative at {xi}: {report.delta:.12g} (residual {report.imag_residual:.2e})")
    return report


def modulus_inequality_check(function: SliceFunction, w: Octonion) -> float:
    """
    (1 - |f(w)|^2) / (1 - |w|^2) - |1 - <f(0), f(w)>|^2 / (1 - |f(0)|^2)

    Nonnegative for self-maps of the ball; zero for the identity.
    """
    f0 = evaluate(function, Octonion(0.0))
    value = evaluate(function, w)
    return (1.0 - value.norm_squared()) / (1.0 - w.norm_squared()) - contact_bound(f0, value)


def _coefficients_in_slice(function: SliceFunction, unit: UnitImaginary) -> float:
    """Largest distance of a numerator coefficient from the plane C_I"""
    coeffs = as_rational(function).num.coeffs
    projection = np.outer(coeffs[:, 0], np.eye(coeffs.shape[1])[0])
    projection += np.outer(coeffs @ unit.components, unit.components)
    return float(np.max(np.linalg.norm(coeffs - projection, axis=1)))


def convex_combination_check(function: SliceFunction, x: float, y: float,
                             unit_i: UnitImaginary, unit_j: UnitImaginary) -> float:
    """
    Deviation from |f(x+yJ)|^2 = (1+<I,J>)/2 |f(x+yI)|^2 + (1-<I,J>)/2 |f(x-yI)|^2.

    Raises:
        HypothesisViolated: If the coefficients leave C_I
    """
    leak = _coefficients_in_slice(function, unit_i)
    if leak > UNIT_TOL:
        raise HypothesisViolated("Coefficients must lie in C_I", context={'distance': leak})
    cosine = inner(unit_i.value, unit_j.value)
    z = np.array([complex(x, y), complex(x, -y)])
    in_i = evaluate_in_slice(function, z, unit_i)
    in_j = evaluate_in_slice(function, z[:1], unit_j)
    lhs = float(np.sum(in_j[0] ** 2))
    rhs = 0.5 * (1.0 + cosine) * float(np.sum(in_i[0] ** 2)) + 0.5 * (1.0 - cosine) * float(np.sum(in_i[1] ** 2))
    return abs(lhs - rhs)


def coefficients_in_slice(function: SliceFunction, unit: UnitImaginary) -> bool:
    return _coefficients_in_slice(function, unit) <= UNIT_TOL
