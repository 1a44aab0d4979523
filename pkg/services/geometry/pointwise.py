"""
Pointwise forms of the regular product

Over H, f * g(q) = f(q) g(f(q)^{-1} q f(q)). Over O this formula fails in
general, but its inner product against I_w and the modulus of the regular
reciprocal keep a pointwise form.
"""

from typing import Optional, Tuple

from models.geometry_models import PointwiseStarResult
from models.octonion import Octonion
from models.series_models import SliceFunction, RegularRational
from services.algebra.operations import inner, inverse, imaginary_unit_of
from services.algebra.sampling import sample
from services.series.constructors import random_series
from services.series.evaluation import evaluate
from services.series.rational import as_rational, rational_conjugate, rational_reciprocal, rational_star
from utils.constants import VANISHING_TOL, IDENTITY_TOL
from utils.exceptions import ZeroAtPoint
from utils.logging_config import setup_logging

logger = setup_logging(logger_name=__name__)

CAMSHAFT_DEVIATION = 1e-3


def conjugated_point(value: Octonion, w: Octonion) -> Octonion:
    """value^{-1} w value"""
    return inverse(value) * w * value


def pointwise_star_check(f: SliceFunction, g: SliceFunction, w: Octonion) -> PointwiseStarResult:
    """
    Compare f * g(w) with its pointwise forms.

    quat_identity is reported for quaternionic f, g and w only; at a zero of
    f it is |f * g(w)|. The octonionic identities need f(w) != 0 and
    f^c(w) != 0.

    Raises:
        ZeroAtPoint: If f(w) = 0 for non-quaternionic input
    """
    f, g = as_rational(f), as_rational(g)
    product = evaluate(rational_star(f, g), w)
    value = evaluate(f, w)
    quaternionic = f.is_quaternionic() and g.is_quaternionic() and w.is_quaternionic()
    result = PointwiseStarResult()

    if value.norm() <= VANISHING_TOL:
        if not quaternionic:
            raise ZeroAtPoint("f vanishes at w", context={'|f(w)|': value.norm()})
        result.quat_identity = product.norm()
        return result

    pointwise = value * evaluate(g, conjugated_point(value, w))
    deviation = (product - pointwise).norm()
    result.pointwise_deviation = deviation
    if quaternionic:
        result.quat_identity = deviation

    unit = imaginary_unit_of(w).value
    result.octo_inner_identity = abs(inner(unit, product) - inner(unit, pointwise))

    conjugate_value = evaluate(rational_conjugate(f), w)
    if conjugate_value.norm() <= VANISHING_TOL:
        raise ZeroAtPoint("f^c vanishes at w", context={'|f^c(w)|': conjugate_value.norm()})
    reciprocal_modulus = evaluate(rational_reciprocal(f), w).norm()
    moved = evaluate(f, conjugated_point(conjugate_value, w)).norm()
    result.octo_modulus_identity = abs(reciprocal_modulus - 1.0 / moved)
    return result


def camshaft_search(rng, attempts: int = 200, degree: int = 2
                    ) -> Optional[Tuple[RegularRational, RegularRational, Octonion, PointwiseStarResult]]:
    """
    Random octonionic f, g, w where the quaternionic pointwise formula fails by
    more than CAMSHAFT_DEVIATION while both octonionic identities still hold.

    Returns:
        (f, g, w, result) for the first witness, or None
    """
    for attempt in range(attempts):
        f = as_rational(random_series(rng, degree, decay=1.0))
        g = as_rational(random_series(rng, degree, decay=1.0))
        w = sample(rng, 'ball')
        try:
            result = pointwise_star_check(f, g, w)
        except ZeroAtPoint:
            continue
        if (result.pointwise_deviation > CAMSHAFT_DEVIATION
                and result.octo_inner_identity <= IDENTITY_TOL
                and result.octo_modulus_identity <= IDENTITY_TOL):
            logger.debug(f"Camshaft witness after {attempt + 1} attempts, deviation {result.pointwise_deviation:.3e}")
            return f, g, w, result
    logger.warning(f"No camshaft witness in {attempts} attempts")
    return None
