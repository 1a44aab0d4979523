"""
Growth, distortion and covering battery on the regular Koebe functions
"""

from typing import List, Tuple

import numpy as np

from models.octonion import Octonion
from pipeline.commands import SuiteCommand, CaseBody, Check, within, at_least
from services.algebra.sampling import sample, sample_unit_imaginary
from services.geometry.growth import growth_distortion_check, quarter_covering_check
from services.series.constructors import koebe
from utils.constants import INEQUALITY_SLACK
from utils.seeding import sample_rngs

EQUALITY_RADII = (0.3, 0.6, 0.9)
EQUALITY_TOL = 1e-9
COVERING_FLOOR = 0.249
COVERING_RADIUS = 0.999


def _upper_bounds(r: float) -> Tuple[float, float, float]:
    return r / (1.0 - r) ** 2, (1.0 + r) / (1.0 - r) ** 3, (1.0 + r) / (1.0 - r)


def _lower_bounds(r: float) -> Tuple[float, float, float]:
    return r / (1.0 + r) ** 2, (1.0 - r) / (1.0 + r) ** 3, (1.0 - r) / (1.0 + r)


class GrowthSuiteCommand(SuiteCommand):
    """Two-sided growth, distortion and log-quotient bounds, and the quarter covering radius"""

    name = "growth"

    def cases(self) -> List[Tuple[str, CaseBody]]:
        return [
            ("koebe_equality", self.koebe_equality),
            ("random_points", self.random_points),
            ("quarter_covering", self.quarter_covering),
        ]

    def koebe_equality(self, rng: np.random.Generator) -> Check:
        """
        For theta = 0 the upper bounds are attained at w = r and the lower ones
        at w = -r; theta = pi swaps the two points.
        """
        unit = sample_unit_imaginary(rng)
        worst = 0.0
        for theta, sign in ((0.0, 1.0), (np.pi, -1.0)):
            f = koebe(unit, theta)
            for r in EQUALITY_RADII:
                upper = growth_distortion_check(f, Octonion(sign * r))
                lower = growth_distortion_check(f, Octonion(-sign * r))
                gaps = [
                    abs(upper.growth_upper), abs(upper.distortion_upper), abs(upper.quotient_upper),
                    abs(lower.growth_lower), abs(lower.distortion_lower), abs(lower.quotient_lower),
                ]
                scales = _upper_bounds(r) + _lower_bounds(r)
                worst = max(worst, max(gap / max(1.0, scale) for gap, scale in zip(gaps, scales)))
        return within(worst, EQUALITY_TOL, radii=list(EQUALITY_RADII))

    def random_points(self, rng: np.random.Generator) -> Check:
        worst = np.inf
        for sub in sample_rngs(rng, self.config.samples):
            f = koebe(sample_unit_imaginary(sub), 2.0 * np.pi * sub.random())
            w = sample(sub, 'ball') * 0.95
            worst = min(worst, growth_distortion_check(f, w).margin)
        return at_least(worst, INEQUALITY_SLACK, samples=self.config.samples)

    def quarter_covering(self, rng: np.random.Generator) -> Check:
        """min |f| on |w| = 0.999 stays above 1/4 up to sampling"""
        minima = [
            quarter_covering_check(koebe(sample_unit_imaginary(rng), theta), rng, rho=COVERING_RADIUS)
            for theta in (0.0, np.pi / 3.0, np.pi)
        ]
        return at_least(min(minima) - COVERING_FLOOR, minima=minima)
