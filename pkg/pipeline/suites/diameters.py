"""
Diameter battery: regular and slice diameters, Landau-Toeplitz and the Cauchy estimate
"""

from typing import List, Tuple

import numpy as np

from models.octonion import Octonion
from models.series_models import RegularRational
from pipeline.commands import SuiteCommand, CaseBody, Check, within, at_least, holds, combine
from services.algebra.sampling import random_unit, sample, sample_unit_imaginary
from services.geometry.diameters import (
    DiameterSampling, regular_diameter, slice_diameter, landau_toeplitz_check, normalize_regular_diameter,
    cauchy_estimate_check, auxiliary_witness, sandwich_margins
)
from services.series.constructors import affine, polynomial
from utils.constants import INEQUALITY_SLACK

AFFINE_RADII = (0.25, 0.5, 0.75)
LANDAU_RADII = (0.25, 0.5, 0.75, 1.0)
SANDWICH_RADII = (0.5, 0.9)
CAUCHY_TOL = 0.02


def _cubic() -> RegularRational:
    """w + w^3/10"""
    return polynomial([0.0, 1.0, 0.0, 0.1])


class DiametersSuiteCommand(SuiteCommand):
    """Sampled diameters of images of balls against their closed-form values and bounds"""

    name = "diameters"

    def cases(self) -> List[Tuple[str, CaseBody]]:
        return [
            ("identity_half_radius", self.identity_half_radius),
            ("affine_unit_slope", self.affine_unit_slope),
            ("affine_slice_diameter", self.affine_slice_diameter),
            ("sandwich", self.sandwich),
            ("landau_toeplitz", self.landau_toeplitz),
            ("cauchy_square_e1", self.cauchy_square_e1),
            ("cauchy_strict_cubic", self.cauchy_strict_cubic),
            ("auxiliary_witness", self.auxiliary_lower_bound),
        ]

    def _relative(self, value: float, expected: float, **details) -> Check:
        return within(abs(value - expected) / expected, self.config.tol_sample, value=value, expected=expected, **details)

    def identity_half_radius(self, rng: np.random.Generator) -> Check:
        estimate = regular_diameter(polynomial([0.0, 1.0]), 0.5, DiameterSampling.draw(rng), self.config.degree)
        return self._relative(estimate.value, 1.0, n_samples=estimate.n_samples)

    def affine_unit_slope(self, rng: np.random.Generator) -> Check:
        """a0 + w a1 with |a1| = 1 has regular diameter 2r"""
        sampling = DiameterSampling.draw(rng)
        f = affine(sample(rng, 'ball'), random_unit(rng))
        return combine(*[
            self._relative(regular_diameter(f, r, sampling, self.config.degree).value, 2.0 * r, r=r)
            for r in AFFINE_RADII
        ])

    def affine_slice_diameter(self, rng: np.random.Generator) -> Check:
        sampling = DiameterSampling.draw(rng)
        f = affine(sample(rng, 'ball'), random_unit(rng))
        return combine(*[
            self._relative(slice_diameter(f, r, sampling).value, 2.0 * r, r=r)
            for r in AFFINE_RADII
        ])

    def sandwich(self, rng: np.random.Generator) -> Check:
        """diam f(rB) <= regular diameter <= 2 diam f(rB) for w + w^2/4"""
        sampling = DiameterSampling.draw(rng)
        f = polynomial([0.0, 1.0, 0.25])
        margins = [margin for r in SANDWICH_RADII for margin in sandwich_margins(f, r, sampling, self.config.degree)]
        return at_least(min(margins), radii=list(SANDWICH_RADII))

    def landau_toeplitz(self, rng: np.random.Generator) -> Check:
        """Normalized w + w^3/10: d(f(rB)) <= 2r, d/(2r) nondecreasing, |f'(0)| <= 1"""
        sampling = DiameterSampling.draw(rng)
        f = normalize_regular_diameter(_cubic(), sampling, degree=self.config.degree)
        report = landau_toeplitz_check(f, LANDAU_RADII, sampling, self.config.degree)
        return combine(
            at_least(report.margin, diameters=report.diameters),
            holds(report.ratio_monotone),
            at_least(1.0 - report.derivative_at_zero, INEQUALITY_SLACK, derivative_at_zero=report.derivative_at_zero),
        )

    def cauchy_square_e1(self, rng: np.random.Generator) -> Check:
        """|a_2| = Diam f(B)/2 for f = w^2 e1"""
        estimate = cauchy_estimate_check(polynomial([0.0, 0.0, Octonion.basis(1)]), 2, rng, degree=self.config.degree)
        return within(abs(estimate.margin) / estimate.lhs, CAUCHY_TOL, lhs=estimate.lhs, rhs=estimate.rhs)

    def cauchy_strict_cubic(self, rng: np.random.Generator) -> Check:
        estimate = cauchy_estimate_check(_cubic(), 3, rng, degree=self.config.degree)
        return combine(
            at_least(estimate.margin, lhs=estimate.lhs, rhs=estimate.rhs),
            holds(estimate.margin > 0.0),
        )

    def auxiliary_lower_bound(self, rng: np.random.Generator) -> Check:
        """sup |f(z) - f(z e^{pi I/n})| / 2 >= |a_n| on the unit circle of a slice"""
        unit = sample_unit_imaginary(rng)
        margins = {
            'square_e1': auxiliary_witness(polynomial([0.0, 0.0, Octonion.basis(1)]), 2, unit) - 1.0,
            'cubic': auxiliary_witness(_cubic(), 3, unit) - 0.1,
        }
        return at_least(min(margins.values()), INEQUALITY_SLACK, margins=margins)
