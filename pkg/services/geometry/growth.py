"""
Growth, distortion and covering checks for normalized maps (f(0) = 0, f'(0) = 1)
"""

import numpy as np

from models.geometry_models import GrowthMargins
from models.multiplication_table import DIMENSION
from models.octonion import Octonion
from models.series_models import RegularRational, SliceFunction
from services.algebra.sampling import sample_components
from services.series.evaluation import evaluate, evaluate_many
from services.series.rational import (
    as_rational, cancel_common_power, rational_derivative, rational_reciprocal, rational_star, shift
)
from services.series.remainder import derivative_at
from utils.exceptions import BadParameter


def log_quotient(function: SliceFunction) -> RegularRational:
    """w f'(w) * f^{-*}(w) over the real denominator f^s, common powers of w cancelled"""
    f = as_rational(function)
    return cancel_common_power(rational_star(shift(rational_derivative(f)), rational_reciprocal(f)))


def growth_distortion_check(function: SliceFunction, w: Octonion) -> GrowthMargins:
    """
    Signed margins of

        r/(1+r)^2 <= |f(w)| <= r/(1-r)^2
        (1-r)/(1+r)^3 <= |f'(w)| <= (1+r)/(1-r)^3
        (1-r)/(1+r) <= |w f'(w) * f^{-*}(w)| <= (1+r)/(1-r)

    with r = |w| < 1.
    """
    r = w.norm()
    if r >= 1.0:
        raise BadParameter("Point must lie in the open unit ball", context={'|w|': r})
    f = as_rational(function)
    value = evaluate(f, w).norm()
    first = derivative_at(f, w).norm()
    quotient = evaluate(log_quotient(f), w).norm()
    return GrowthMargins(
        growth_lower=value - r / (1.0 + r) ** 2,
        growth_upper=r / (1.0 - r) ** 2 - value,
        distortion_lower=first - (1.0 - r) / (1.0 + r) ** 3,
        distortion_upper=(1.0 + r) / (1.0 - r) ** 3 - first,
        quotient_lower=quotient - (1.0 - r) / (1.0 + r),
        quotient_upper=(1.0 + r) / (1.0 - r) - quotient,
    )


def quarter_covering_check(function: SliceFunction, rng: np.random.Generator,
                           rho: float = 0.999, samples: int = 1000) -> float:
    """Sampled min |f| on the sphere |w| = rho, which stays above 1/4 for normalized maps"""
    if not 0.0 < rho < 1.0:
        raise BadParameter("Radius must lie in (0, 1)", context={'rho': rho})
    basis = np.vstack([np.eye(DIMENSION), -np.eye(DIMENSION)])
    points = rho * np.vstack([basis, sample_components(rng, 'sphere', samples)])
    return float(np.min(np.linalg.norm(evaluate_many(function, points), axis=1)))
