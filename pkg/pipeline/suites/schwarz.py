"""
Boundary Schwarz battery for octonionic self-maps of the unit ball
"""

from typing import Dict, List, Tuple

import numpy as np

from models.octonion import Octonion
from pipeline.commands import SuiteCommand, CaseBody, Check, within, at_least, holds, combine
from services.algebra.sampling import sample, sample_unit_imaginary
from services.geometry.boundary import boundary_modulus_derivative, modulus_inequality_check
from services.geometry.extremum import extremum_scan
from services.geometry.pointwise import pointwise_star_check, camshaft_search, CAMSHAFT_DEVIATION
from services.geometry.quaternionic import convexity_check
from services.series.constructors import (
    twisted_fixed_point, extremal, blaschke, polynomial, monomial_rotation,
    random_series, random_invertible_series, random_octonionic_self_map
)
from services.series.evaluation import evaluate
from services.series.remainder import derivative_at, second_remainder
from utils.constants import POINTWISE_TOL, FD_CROSSCHECK_TOL, IDENTITY_TOL
from utils.seeding import sample_rngs

SELF_MAPS = 200
BOUNDARY_SLACK = 1e-8
EXTREMAL_PARAMETERS = (-1.0, -0.5, 0.0, 0.5)
POINTWISE_DEGREE = 6


def _boundary_point(rng: np.random.Generator, angle: float = 0.7) -> Octonion:
    """Unit point cos(angle) + sin(angle) I on a random slice"""
    return Octonion.from_slice(complex(np.cos(angle), np.sin(angle)), sample_unit_imaginary(rng).value)


class SchwarzSuiteCommand(SuiteCommand):
    """Boundary derivative of |f|, its lower bounds and the pointwise product identities"""

    name = "schwarz"

    def cases(self) -> List[Tuple[str, CaseBody]]:
        return [
            ("twisted_fixed_point", self.worked_example),
            ("identity_and_square", self.identity_and_square),
            ("random_self_maps", self.random_self_maps),
            ("extremal_family", self.extremal_family),
            ("modulus_inequality", self.modulus_inequality),
            ("convexity_blaschke", self.convexity_blaschke),
            ("camshaft_witness", self.camshaft_witness),
            ("quaternionic_pointwise_star", self.quaternionic_pointwise_star),
            ("octonionic_pointwise_identities", self.octonionic_pointwise_identities),
            ("extremum_scan", self.extremum_scans),
        ]

    def worked_example(self, rng: np.random.Generator) -> Check:
        """f = phi * J at the contact point J"""
        i, j = Octonion.basis(1), Octonion.basis(2)
        f = twisted_fixed_point(i, j)
        expected_first = (4.0 / 3.0) * (2.0 - i * j)
        expected_r2 = (2.0 / 3.0) * (i - 2.0 * j)
        report = boundary_modulus_derivative(f, j)
        return combine(
            within((evaluate(f, j) - j).norm(), POINTWISE_TOL, check='f(J) = J'),
            within((derivative_at(f, j) - expected_first).norm(), POINTWISE_TOL, check="f'(J)"),
            within((second_remainder(f, j) - expected_r2).norm(), POINTWISE_TOL, check='R2'),
            within(abs(report.delta - 8.0 / 3.0), POINTWISE_TOL, delta=report.delta),
            within(report.imag_residual, POINTWISE_TOL, imag_residual=report.imag_residual),
            within(abs(report.fd_crosscheck - 8.0 / 3.0), FD_CROSSCHECK_TOL, fd=report.fd_crosscheck),
        )

    def identity_and_square(self, rng: np.random.Generator) -> Check:
        """delta = 1 for w and delta = 2 for w^2 conj(xi), both equal to the fixed-point bound"""
        xi = sample(rng, 'sphere')
        identity = boundary_modulus_derivative(polynomial([0.0, 1.0]), xi)
        square = boundary_modulus_derivative(monomial_rotation(2, xi.conj()), xi)
        return combine(
            within(abs(identity.delta - 1.0), POINTWISE_TOL, identity_delta=identity.delta),
            within(abs(square.delta - 2.0), POINTWISE_TOL, square_delta=square.delta),
            within(abs(square.delta - (square.fixed_point_bound or 0.0)), POINTWISE_TOL),
        )

    def random_self_maps(self, rng: np.random.Generator) -> Check:
        margins, residuals = [], []
        for sub in sample_rngs(rng, SELF_MAPS):
            f, xi = random_octonionic_self_map(sub)
            report = boundary_modulus_derivative(f, xi)
            margins.append(report.margin)
            residuals.append(report.imag_residual)
        return combine(
            at_least(min(margins), BOUNDARY_SLACK, maps=SELF_MAPS),
            within(max(residuals), BOUNDARY_SLACK, worst_residual=max(residuals)),
        )

    def extremal_family(self, rng: np.random.Generator) -> Check:
        """delta = 2/(1 + Re f'(0)) for the extremal maps"""
        deviations: Dict[str, float] = {}
        for a in EXTREMAL_PARAMETERS:
            xi = _boundary_point(rng)
            report = boundary_modulus_derivative(extremal(a, xi), xi)
            if report.fixed_point_bound is None:
                return holds(False, a=a, reason='fixed-point bound not computed')
            deviations[str(a)] = abs(report.delta - report.fixed_point_bound)
        return within(max(deviations.values()), BOUNDARY_SLACK, deviations=deviations)

    def modulus_inequality(self, rng: np.random.Generator) -> Check:
        """(1-|f(w)|^2)/(1-|w|^2) >= |1-<f(0),f(w)>|^2/(1-|f(0)|^2) inside the ball"""
        worst = np.inf
        for sub in sample_rngs(rng, self.config.samples):
            f, _ = random_octonionic_self_map(sub)
            w = sample(sub, 'ball') * 0.95
            worst = min(worst, modulus_inequality_check(f, w))
        return at_least(worst, BOUNDARY_SLACK, samples=self.config.samples)

    def convexity_blaschke(self, rng: np.random.Generator) -> Check:
        worst = np.inf
        for sub in sample_rngs(rng, SELF_MAPS):
            unit = sample_unit_imaginary(sub)
            power = int(sub.integers(0, 3))
            count = int(sub.integers(0 if power else 1, 3))
            zeros = 0.9 * np.sqrt(sub.random(count)) * np.exp(2j * np.pi * sub.random(count))
            theta = 2.0 * np.pi * sub.random()
            xi = Octonion.from_slice(complex(np.cos(theta), np.sin(theta)), unit.value)
            worst = min(worst, convexity_check(blaschke(list(zeros), unit, power), xi))
        return at_least(worst, BOUNDARY_SLACK, maps=SELF_MAPS)

    def camshaft_witness(self, rng: np.random.Generator) -> Check:
        """The quaternionic pointwise formula fails over O while both octonionic identities hold"""
        found = camshaft_search(rng)
        if found is None:
            return holds(False, witness=False)
        _, _, w, result = found
        return combine(
            at_least(result.pointwise_deviation - CAMSHAFT_DEVIATION, deviation=result.pointwise_deviation),
            within(result.octo_inner_identity, IDENTITY_TOL, check='inner'),
            within(result.octo_modulus_identity, IDENTITY_TOL, check='modulus'),
            holds(True, w=w.to_list()),
        )

    def quaternionic_pointwise_star(self, rng: np.random.Generator) -> Check:
        """f * g(q) = f(q) g(f(q)^{-1} q f(q)) over H"""
        worst = 0.0
        for sub in sample_rngs(rng, self.config.samples):
            f = random_series(sub, POINTWISE_DEGREE, quaternionic=True)
            g = random_series(sub, POINTWISE_DEGREE, quaternionic=True)
            q = sample(sub, 'quaternion-ball')
            worst = max(worst, pointwise_star_check(f, g, q).quat_identity)
        return within(worst, POINTWISE_TOL, samples=self.config.samples)

    def octonionic_pointwise_identities(self, rng: np.random.Generator) -> Check:
        worst_inner, worst_modulus = 0.0, 0.0
        for sub in sample_rngs(rng, self.config.samples):
            f = random_invertible_series(sub, POINTWISE_DEGREE)
            g = random_series(sub, POINTWISE_DEGREE)
            w = sample(sub, 'ball')
            result = pointwise_star_check(f, g, w)
            worst_inner = max(worst_inner, result.octo_inner_identity)
            worst_modulus = max(worst_modulus, result.octo_modulus_identity)
        return combine(
            within(worst_inner, POINTWISE_TOL, check='inner'),
            within(worst_modulus, POINTWISE_TOL, check='modulus'),
        )

    def extremum_scans(self, rng: np.random.Generator) -> Check:
        """Maximum on the outer shell; real-axis minima only at zeros"""
        self_map, _ = random_octonionic_self_map(rng)
        functions = {
            'twisted_fixed_point': twisted_fixed_point(),
            'real_zeros': polynomial([-0.25, 0.0, 1.0]),
            'spherical_zero': polynomial([0.25, 0.0, 1.0]),
            'self_map': self_map,
        }
        outcomes = {}
        for label, function in functions.items():
            report = extremum_scan(function, rng)
            outcomes[label] = {
                'passed': report.passed,
                'real_axis_minima': len(report.real_axis_minima),
                'off_axis_minima': len(report.off_axis_minima),
            }
        return holds(all(entry['passed'] for entry in outcomes.values()), scans=outcomes)
