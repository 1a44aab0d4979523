"""
Sampled diameters of images of balls and the Landau-Toeplitz / Cauchy checks

regular:   max over directions u, v and |w| = r of |f_u(w) - f_v(w)|, where
           f_u has coefficients u^n a_n
slice:     max over sampled slices C_I of the diameter of f(r B_I)
euclidean: diameter of the sampled image f(r S)

The maximum principle for the regular diameter allows sampling w on the
sphere |w| = r only. Passing the same DiameterSampling to several radii
gives matched estimates, so ratios across r are not swamped by sampling
noise.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
from scipy.spatial.distance import pdist

from models.geometry_models import DiameterKind, DiameterEstimate, LandauToeplitzReport, CauchyEstimate
from models.multiplication_table import DIMENSION, table_product
from models.octonion import Octonion, UnitImaginary
from models.series_models import SliceSeries, RegularRational, SliceFunction
from services.algebra.operations import imaginary_units
from services.algebra.sampling import direction_set, sample_components, circle_points
from services.series.calculus import unit_powers
from services.series.evaluation import evaluate_many, evaluate_in_slice, embed
from services.series.rational import taylor_coefficients, rational_scale, as_rational
from utils.constants import (
    DIAMETER_DIRECTIONS, DIAMETER_RADIAL_POINTS, DEFAULT_DEGREE, SAMPLE_TOL,
    MONOTONICITY_NOISE, INEQUALITY_SLACK
)
from utils.exceptions import BadParameter
from utils.logging_config import setup_logging

logger = setup_logging(logger_name=__name__)

SLICE_COUNT = 64
CIRCLE_NODES = 256
BOUNDARY_PAIRS = 10_000


@dataclass(frozen=True, eq=False)
class DiameterSampling:
    """Fixed sample sets shared across radii"""
    directions: np.ndarray    # (U, 8) unit directions u
    points: np.ndarray        # (W, 8) unit directions for w
    slices: np.ndarray        # (S, 8) unit imaginaries
    angles: np.ndarray        # circle angles for slice diameters

    @classmethod
    def draw(cls, rng: np.random.Generator, count: int = DIAMETER_DIRECTIONS,
             points: int = DIAMETER_RADIAL_POINTS, slices: int = SLICE_COUNT,
             nodes: int = CIRCLE_NODES) -> "DiameterSampling":
        directions = direction_set(rng, count)
        sphere = np.vstack([np.eye(DIMENSION), -np.eye(DIMENSION), sample_components(rng, 'sphere', points)])
        units = np.vstack([np.eye(DIMENSION)[1:], sample_components(rng, 'unit-imaginary', slices)])
        return cls(directions=directions, points=sphere, slices=units, angles=circle_points(nodes))


def _series_of(function: SliceFunction, degree: int) -> SliceSeries:
    """Polynomials are used as they are; rationals through their Taylor expansion"""
    if isinstance(function, SliceSeries):
        return function
    if function.den.size == 1:
        return SliceSeries(function.num.coeffs / function.den[0])
    return taylor_coefficients(function, degree)


def _check_radius(r: float):
    if not 0.0 < r <= 1.0:
        raise BadParameter("Radius must lie in (0, 1]", context={'r': r})


def regular_diameter(function: SliceFunction, r: float, sampling: DiameterSampling,
                     degree: int = DEFAULT_DEGREE) -> DiameterEstimate:
    """max |f_u(w) - f_v(w)| over sampled u, v and |w| = r"""
    _check_radius(r)
    series = _series_of(function, degree)
    powers = np.stack([unit_powers(Octonion(u), series.degree) for u in sampling.directions])
    rotated = table_product(powers, series.coeffs[None, :, :])      # (U, N+1, 8)
    z, units = imaginary_units(r * sampling.points)
    z_powers = z[:, None] ** np.arange(series.degree + 1)[None, :]  # (W, N+1)
    gamma = np.einsum('wn,und->wud', z_powers, rotated)             # (W, U, 8)
    images = embed(gamma, units[:, None, :])
    value = max(float(np.max(pdist(images[k]))) for k in range(images.shape[0]))
    pairs = images.shape[1] * (images.shape[1] - 1) // 2 * images.shape[0]
    return DiameterEstimate(kind=DiameterKind.REGULAR, r=r, value=value, n_samples=pairs)


def slice_diameter(function: SliceFunction, r: float, sampling: DiameterSampling) -> DiameterEstimate:
    """max over sampled I of diam f(r B_I), from the circle of radius r in C_I"""
    _check_radius(r)
    z = r * np.exp(1j * sampling.angles)
    value = 0.0
    for row in sampling.slices:
        images = evaluate_in_slice(function, z, UnitImaginary(Octonion(row)))
        value = max(value, float(np.max(pdist(images))))
    pairs = len(sampling.slices) * z.size * (z.size - 1) // 2
    return DiameterEstimate(kind=DiameterKind.SLICE, r=r, value=value, n_samples=pairs)


def euclidean_diameter(function: SliceFunction, r: float, sampling: DiameterSampling) -> DiameterEstimate:
    """Diameter of f on the sampled sphere of radius r"""
    _check_radius(r)
    points = np.vstack([sampling.directions, sampling.points]) * r
    images = evaluate_many(function, points)
    value = float(np.max(pdist(images)))
    return DiameterEstimate(kind=DiameterKind.EUCLIDEAN, r=r, value=value, n_samples=points.shape[0])


def diameters(function: SliceFunction, r: float, kind: DiameterKind, sampling: DiameterSampling,
              degree: int = DEFAULT_DEGREE) -> DiameterEstimate:
    if kind is DiameterKind.REGULAR:
        return regular_diameter(function, r, sampling, degree)
    if kind is DiameterKind.SLICE:
        return slice_diameter(function, r, sampling)
    return euclidean_diameter(function, r, sampling)


def normalize_regular_diameter(function: SliceFunction, sampling: DiameterSampling,
                               target: float = 2.0, degree: int = DEFAULT_DEGREE) -> RegularRational:
    """Rescale f so that its sampled regular diameter on the unit ball equals `target`"""
    current = regular_diameter(function, 1.0, sampling, degree).value
    if current <= 0.0:
        raise BadParameter("Cannot normalize a constant function")
    return rational_scale(as_rational(function), target / current)


def landau_toeplitz_check(function: SliceFunction, r_grid: Sequence[float],
                          sampling: DiameterSampling, degree: int = DEFAULT_DEGREE) -> LandauToeplitzReport:
    """
    d(f(rB)) <= 2r and d(f(rB))/(2r) nondecreasing for f with regular diameter 2 on B.

    The caller normalizes f first (normalize_regular_diameter).
    """
    radii = sorted(float(r) for r in r_grid)
    values = [regular_diameter(function, r, sampling, degree).value for r in radii]
    ratios = [value / (2.0 * r) for value, r in zip(values, radii)]
    monotone = all(later >= earlier - MONOTONICITY_NOISE for earlier, later in zip(ratios, ratios[1:]))
    first = _series_of(function, degree).coefficient(1).norm()
    return LandauToeplitzReport(
        radii=radii,
        diameters=values,
        bound_margins=[2.0 * r + SAMPLE_TOL - value for value, r in zip(values, radii)],
        ratio_monotone=monotone,
        derivative_at_zero=first,
    )


def boundary_diameter(function: SliceFunction, rng: np.random.Generator,
                      pairs: int = BOUNDARY_PAIRS, sampling: Optional[DiameterSampling] = None) -> float:
    """Sampled Diam f(B) from random boundary pairs plus all pairs of a direction set"""
    sampling = sampling or DiameterSampling.draw(rng)
    first = evaluate_many(function, sample_components(rng, 'sphere', pairs))
    second = evaluate_many(function, sample_components(rng, 'sphere', pairs))
    value = float(np.max(np.linalg.norm(first - second, axis=1)))
    images = evaluate_many(function, np.vstack([sampling.directions, sampling.points]))
    return max(value, float(np.max(pdist(images))))


def cauchy_auxiliary(function: SliceFunction, n: int, z: np.ndarray, unit: UnitImaginary) -> np.ndarray:
    """g(z) = f(z) - f(z e^{pi I / n}) on points of C_I; sup |g| >= 2|a_n|"""
    z = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    rotated = z * np.exp(1j * np.pi / n)
    return evaluate_in_slice(function, z, unit) - evaluate_in_slice(function, rotated, unit)


def cauchy_estimate_check(function: SliceFunction, n: int, rng: np.random.Generator,
                          pairs: int = BOUNDARY_PAIRS, degree: int = DEFAULT_DEGREE) -> CauchyEstimate:
    """|a_n| <= Diam f(B) / 2 for bounded f"""
    if n < 1:
        raise BadParameter("Coefficient index must be positive", context={'n': n})
    coefficient = _series_of(function, max(n, degree)).coefficient(n).norm()
    half = boundary_diameter(function, rng, pairs) / 2.0
    return CauchyEstimate(lhs=coefficient, rhs=half, margin=half - coefficient)


def auxiliary_witness(function: SliceFunction, n: int, unit: UnitImaginary, nodes: int = CIRCLE_NODES) -> float:
    """sup over the unit circle of C_I of |f(z) - f(z e^{pi I/n})| / 2"""
    z = np.exp(1j * circle_points(nodes))
    return float(np.max(np.linalg.norm(cauchy_auxiliary(function, n, z, unit), axis=1))) / 2.0


def sandwich_margins(function: SliceFunction, r: float, sampling: DiameterSampling,
                     degree: int = DEFAULT_DEGREE) -> List[float]:
    """diam <= regular diameter <= 2 diam, as signed margins"""
    euclidean = euclidean_diameter(function, r, sampling).value
    regular = regular_diameter(function, r, sampling, degree).value
    return [regular - euclidean + SAMPLE_TOL * max(1.0, euclidean), 2.0 * euclidean - regular + INEQUALITY_SLACK]
