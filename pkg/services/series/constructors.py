"""
Named families of regular rationals and random test functions

Every family is returned in closed rational form with a real denominator,
built through the rational calculus so that the denominator is the
symmetrization of the left factor.
"""

import math
from typing import Any, Callable, Dict, Sequence, Tuple

import numpy as np

from models.multiplication_table import DIMENSION
from models.octonion import Octonion, UnitImaginary, ONE
from models.series_models import SliceSeries, RegularRational
from services.algebra.operations import inner, inverse
from services.algebra.sampling import sample, sample_unit_imaginary, random_unit
from services.series.calculus import reciprocal
from services.series.rational import (
    rational_star, rational_scale, rational_add, rational_reciprocal, shift, trim, as_rational
)
from utils.constants import UNIT_TOL, RANDOM_SERIES_DECAY
from utils.exceptions import BadParameter
from utils.logging_config import setup_logging

logger = setup_logging(logger_name=__name__)


def _octonion(value: Any, name: str) -> Octonion:
    if isinstance(value, Octonion):
        return value
    if isinstance(value, UnitImaginary):
        return value.value
    try:
        return Octonion(value)
    except (BadParameter, TypeError, ValueError):
        raise BadParameter(f"Parameter '{name}' must be a real or 8 reals", context={name: value})


def _unit_imaginary(value: Any, name: str) -> UnitImaginary:
    if isinstance(value, UnitImaginary):
        return value
    try:
        return UnitImaginary(_octonion(value, name))
    except BadParameter:
        raise BadParameter(f"Parameter '{name}' must be a unit imaginary octonion", context={name: value})


def _require_unit(value: Octonion, name: str):
    if abs(value.norm() - 1.0) > UNIT_TOL:
        raise BadParameter(f"Parameter '{name}' must have modulus 1", context={f'|{name}|': value.norm()})


def _require_inside(value: Octonion, name: str):
    if value.norm() >= 1.0:
        raise BadParameter(f"Parameter '{name}' must lie in the open unit ball", context={f'|{name}|': value.norm()})


def _linear(constant: Octonion, slope: Octonion) -> SliceSeries:
    """constant + w slope"""
    return SliceSeries.from_octonions([constant, slope])


def left_quotient(left: SliceSeries, right: SliceSeries) -> RegularRational:
    """left^{-*} * right"""
    return rational_star(reciprocal(left), right)


def extremal(a: float, xi: Any) -> RegularRational:
    """w (1 - w a conj(xi))^{-*} * (w conj(xi) - a), a in [-1, 1), |xi| = 1"""
    a = float(a)
    xi = _octonion(xi, 'xi')
    if not -1.0 <= a < 1.0:
        raise BadParameter("Extremal parameter a must lie in [-1, 1)", context={'a': a})
    _require_unit(xi, 'xi')
    left = _linear(ONE, -a * xi.conj())
    right = _linear(Octonion(-a), xi.conj())
    return trim(shift(left_quotient(left, right)))


def mobius(u: Any, v: Any = 1.0) -> RegularRational:
    """Regular Moebius map (1 - w conj(u))^{-*} * (w - u) v, |u| < 1, |v| = 1"""
    u = _octonion(u, 'u')
    v = _octonion(v, 'v')
    _require_inside(u, 'u')
    _require_unit(v, 'v')
    left = _linear(ONE, -u.conj())
    right = _linear(-u, ONE)
    return trim(rational_scale(left_quotient(left, right), v))


def koebe(unit: Any, theta: float) -> RegularRational:
    """w (1 - w e^{I theta})^{-*2}"""
    unit = _unit_imaginary(unit, 'I')
    c = math.cos(theta) * ONE + math.sin(theta) * unit.value
    factor = reciprocal(_linear(ONE, -c))
    return trim(shift(rational_star(factor, factor)))


def monomial_rotation(n: int, u: Any) -> RegularRational:
    """w^n u with |u| = 1"""
    n = int(n)
    if n < 0:
        raise BadParameter("Power must be nonnegative", context={'n': n})
    u = _octonion(u, 'u')
    _require_unit(u, 'u')
    return RegularRational.from_series(SliceSeries.monomial(n, u))


def twisted_fixed_point(unit_i: Any = None, unit_j: Any = None) -> RegularRational:
    """
    phi * J with phi(w) = w (1 + w I/2)^{-*} * (I/2 - w).

    Closed form w (w^2 + 4)^{-1} (2 (w^2 + 1) IJ - 3 w J); f(J) = J.
    """
    unit_i = _unit_imaginary(unit_i if unit_i is not None else Octonion.basis(1), 'I')
    unit_j = _unit_imaginary(unit_j if unit_j is not None else Octonion.basis(2), 'J')
    if abs(inner(unit_i.value, unit_j.value)) > UNIT_TOL:
        raise BadParameter("I and J must be perpendicular", context={'<I,J>': inner(unit_i.value, unit_j.value)})
    i = unit_i.value
    left = _linear(ONE, 0.5 * i)
    right = _linear(0.5 * i, -ONE)
    phi = shift(left_quotient(left, right))
    return trim(rational_scale(phi, unit_j.value))


def minda(delta: float, xi: Any = 1.0, c: Any = 1.0) -> RegularRational:
    """(w(delta - 1) - xi(delta + 1))^{-*} * (xi(delta - 1) - w(delta + 1)) c, delta >= 1"""
    delta = float(delta)
    if delta < 1.0:
        raise BadParameter("delta must be at least 1", context={'delta': delta})
    xi = _octonion(xi, 'xi')
    c = _octonion(c, 'c')
    _require_unit(xi, 'xi')
    _require_unit(c, 'c')
    left = _linear(-(delta + 1.0) * xi, Octonion(delta - 1.0))
    right = _linear((delta - 1.0) * xi, Octonion(-(delta + 1.0)))
    return trim(rational_scale(left_quotient(left, right), c))


def herzig(a: float, f0: Any, xi: Any = 1.0, c: Any = 1.0) -> RegularRational:
    """
    Extremal map of the sharp quaternionic boundary bound with f(0) = f0 and f(xi) = c.

    v = (f0 - c)^{-1} xi (1 - c conj(f0)), eta = (1 - c conj(f0))^{-1} xi (1 - c conj(f0)),
    h = extremal(a, eta) and f = (1 - h * conj(f0 v))^{-*} * (f0 - h * conj(v)).
    """
    f0 = _octonion(f0, 'f0')
    xi = _octonion(xi, 'xi')
    c = _octonion(c, 'c')
    _require_inside(f0, 'f0')
    _require_unit(xi, 'xi')
    _require_unit(c, 'c')
    rotation = ONE - c * f0.conj()
    v = inverse(f0 - c) * (xi * rotation)
    eta = inverse(rotation) * (xi * rotation)
    eta = eta / eta.norm()
    h = extremal(a, eta)

    left = rational_add(as_rational(SliceSeries.constant(ONE)), rational_scale(h, -(f0 * v).conj()))
    right = rational_add(as_rational(SliceSeries.constant(f0)), rational_scale(h, -v.conj()))
    return trim(rational_star(rational_reciprocal(left), right))


def blaschke(factors: Sequence[complex], unit: Any = None, power: int = 0, c: Any = 1.0) -> RegularRational:
    """
    w^power * M_{u_1} * ... * M_{u_k} * c with every u_k = Re + Im I in the plane C_I.

    Args:
        factors: Complex zeros |u_k| < 1, read in the slice of `unit`
        unit: Imaginary unit I of the slice (default e1)
        power: Order of the zero at the origin
        c: Unit constant multiplied on the right
    """
    unit = _unit_imaginary(unit if unit is not None else Octonion.basis(1), 'I')
    result = RegularRational.from_series(SliceSeries.monomial(int(power)))
    for zero in factors:
        zero = complex(zero)
        result = rational_star(result, mobius(Octonion.from_slice(zero, unit.value)))
    c = _octonion(c, 'c')
    _require_unit(c, 'c')
    return trim(rational_scale(result, c))


def affine(a0: Any, a1: Any) -> RegularRational:
    """a0 + w a1"""
    return RegularRational.from_series(_linear(_octonion(a0, 'a0'), _octonion(a1, 'a1')))


def polynomial(coeffs: Sequence[Any]) -> RegularRational:
    """sum w^n a_n from a list of reals or 8-vectors"""
    if len(coeffs) == 0:
        raise BadParameter("Polynomial needs at least one coefficient")
    return RegularRational.from_series(
        SliceSeries.from_octonions([_octonion(value, f'a{n}') for n, value in enumerate(coeffs)])
    )


FAMILIES: Dict[str, Callable[..., RegularRational]] = {
    'extremal': extremal,
    'mobius': mobius,
    'koebe': koebe,
    'monomial_rotation': monomial_rotation,
    'twisted_fixed_point': twisted_fixed_point,
    'example_3_3': twisted_fixed_point,
    'minda': minda,
    'herzig': herzig,
    'blaschke': blaschke,
    'affine': affine,
    'polynomial': polynomial,
}


def construct(family: str, **params) -> RegularRational:
    """
    Build a named family member.

    Raises:
        BadParameter: For unknown families, missing or out-of-domain parameters
    """
    if family not in FAMILIES:
        raise BadParameter(f"Unknown family '{family}'", context={'families': sorted(FAMILIES)})
    try:
        result = FAMILIES[family](**params)
    except TypeError as e:
        raise BadParameter(f"Invalid parameters for '{family}': {e}")
    logger.debug(f"Constructed {family} with numerator degree {result.num.degree}, denominator degree {result.den_degree}")
    return result


# Random test functions

def random_series(rng: np.random.Generator, degree: int, decay: float = RANDOM_SERIES_DECAY,
                  quaternionic: bool = False) -> SliceSeries:
    """Gaussian coefficients damped by decay^n"""
    active = 4 if quaternionic else DIMENSION
    coeffs = np.zeros((degree + 1, DIMENSION))
    coeffs[:, :active] = rng.standard_normal((degree + 1, active))
    coeffs *= (decay ** np.arange(degree + 1))[:, None]
    return SliceSeries(coeffs)


def random_invertible_series(rng: np.random.Generator, degree: int, floor: float = 4.0,
                             quaternionic: bool = False) -> SliceSeries:
    """Random series with |a_0| >= floor, so that f^s has no zeros near the origin"""
    coeffs = np.array(random_series(rng, degree, quaternionic=quaternionic).coeffs)
    a0 = coeffs[0]
    coeffs[0] = a0 + floor * a0 / np.linalg.norm(a0)
    return SliceSeries(coeffs)


def _random_disc_point(rng: np.random.Generator, radius: float = 0.9) -> complex:
    return complex(radius * math.sqrt(rng.random()) * np.exp(2j * math.pi * rng.random()))


def random_octonionic_self_map(rng: np.random.Generator) -> Tuple[RegularRational, Octonion]:
    """
    Self-map q^n B * c with a C_I Blaschke product B and a unit octonion c,
    together with a boundary contact point.
    """
    unit = sample_unit_imaginary(rng)
    power = int(rng.integers(0, 3))
    zeros = [_random_disc_point(rng) for _ in range(int(rng.integers(0 if power else 1, 3)))]
    c = random_unit(rng)
    f = blaschke(zeros, unit, power, c)
    if rng.random() < 0.5:
        theta = 2.0 * math.pi * rng.random()
        xi = Octonion.from_slice(complex(math.cos(theta), math.sin(theta)), unit.value)
    else:
        xi = sample(rng, 'sphere')
    return f, xi


def random_quaternionic_self_map(rng: np.random.Generator) -> Tuple[RegularRational, Octonion]:
    """
    Regular product of quaternionic Moebius maps, a power of q and a unit constant,
    together with a boundary point (every boundary point is a contact point).
    """
    power = int(rng.integers(0, 2))
    factors = int(rng.integers(0 if power else 1, 3))
    result = as_rational(SliceSeries.monomial(power))
    for _ in range(factors):
        u = sample(rng, 'quaternion-ball') * 0.9
        v = random_unit(rng, quaternionic=True)
        result = rational_star(result, mobius(u, v))
    result = trim(rational_scale(result, random_unit(rng, quaternionic=True)))
    return result, sample(rng, 'quaternion-sphere')

