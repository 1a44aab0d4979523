"""
Counting zeros of the symmetrization with the argument principle

L_f = (f^s)'/f^s has real coefficients, so on every slice C_I it is an
ordinary complex function. The contour integral (1/2 pi i) of L_f around
the discs of radius delta centred at x0 +/- y0 I counts the zeros of f^s
inside, with multiplicity. A spherical zero of f therefore counts twice.
"""

from typing import Optional

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.integrate import trapezoid

from models.octonion import UnitImaginary
from models.series_models import SliceSeries, RegularRational, SliceFunction
from models.zero_models import ContourSpec, CountResult
from services.algebra.sampling import sample_unit_imaginary
from services.series.calculus import symmetrization_coefficients
from services.series.evaluation import evaluate_in_slice
from services.series.rational import as_rational, trim
from utils.constants import CONTOUR_ZERO_THRESHOLD, COUNT_GUARD, SLICE_INDEPENDENCE_TOL
from utils.exceptions import IdenticallyZero, ZeroOnContour, NonIntegerCount, HypothesisViolated
from utils.logging_config import setup_logging

logger = setup_logging(logger_name=__name__)


def log_derivative(function: SliceFunction) -> RegularRational:
    """
    L_f = (f^s)'/f^s as a real-coefficient rational.

    For f = D^{-1} N, f^s = N^s / D^2 and L_f = (N^s' D - 2 D' N^s) / (N^s D).

    Raises:
        IdenticallyZero: If the numerator of f vanishes identically
    """
    f = as_rational(function)
    if f.num.is_zero():
        raise IdenticallyZero("Logarithmic derivative of the zero function")
    symmetric = symmetrization_coefficients(f.num)
    numerator = P.polysub(P.polymul(P.polyder(symmetric), f.den),
                          2.0 * P.polymul(P.polyder(f.den), symmetric))
    return trim(RegularRational(num=SliceSeries.from_real(numerator), den=P.polymul(symmetric, f.den)))


def _projected(function: RegularRational, z: np.ndarray, unit: UnitImaginary) -> np.ndarray:
    """Values in C_I read back as complex numbers"""
    values = evaluate_in_slice(function, z, unit)
    return values[:, 0] + 1j * (values @ unit.components)


def _integrate(log_der: RegularRational, symmetric: np.ndarray, den: np.ndarray,
               spec: ContourSpec, unit: UnitImaginary) -> complex:
    theta = 2.0 * np.pi * np.arange(spec.M + 1) / spec.M
    circle = np.exp(1j * theta)
    total = 0.0 + 0.0j
    for center in spec.centers:
        nodes = center + spec.delta * circle
        modulus = np.abs(P.polyval(nodes, symmetric)) / np.abs(P.polyval(nodes, den)) ** 2
        smallest = float(np.min(modulus))
        if smallest <= CONTOUR_ZERO_THRESHOLD:
            raise ZeroOnContour("f^s vanishes on the contour", context={'center': center, 'min |f^s|': smallest})
        integrand = _projected(log_der, nodes, unit) * 1j * spec.delta * circle
        total += trapezoid(integrand, theta)
    return total / (2.0j * np.pi)


def contour_count(function: SliceFunction, spec: ContourSpec,
                  rng: Optional[np.random.Generator] = None) -> CountResult:
    """
    Number of zeros of f^s inside the symmetric neighbourhood described by spec.

    The integral is repeated in a second random slice; the difference is
    reported as slice_deviation.

    Raises:
        ZeroOnContour: If min |f^s| on the nodes is at most CONTOUR_ZERO_THRESHOLD
        NonIntegerCount: If the integral is 0.05 or more away from an integer
    """
    f = as_rational(function)
    log_der = log_derivative(f)
    symmetric = symmetrization_coefficients(f.num)
    raw = _integrate(log_der, symmetric, f.den, spec, spec.I)

    rng = rng if rng is not None else np.random.Generator(np.random.Philox(0))
    other = _integrate(log_der, symmetric, f.den, spec, sample_unit_imaginary(rng))
    deviation = abs(raw - other)
    if deviation > SLICE_INDEPENDENCE_TOL:
        logger.warning(f"Contour integral depends on the slice: deviation {deviation:.3e}")

    count = int(round(raw.real))
    guard = abs(raw - count)
    if guard >= COUNT_GUARD:
        raise NonIntegerCount("Contour integral is not close to an integer", context={'raw': raw, 'guard': guard})
    if count < 0:
        raise HypothesisViolated("Negative count: f has poles inside the contour", context={'count': count})
    logger.debug(f"Contour {spec.to_dict()}: raw {raw:.3e}, count {count}")
    return CountResult(raw=complex(raw), count=count, guard=float(guard), slice_deviation=float(deviation))


def count_zero_spheres(function: SliceFunction, spec: ContourSpec,
                       rng: Optional[np.random.Generator] = None) -> float:
    """Zeros of f inside the contour: the f^s count halved"""
    return contour_count(function, spec, rng).count / 2.0
