"""
Quaternionic boundary battery: sharp bound against Osserman, Julia's inequality,
the T_f transform and the inner boundary estimate
"""

from typing import List, Tuple

import numpy as np

from models.octonion import Octonion, ONE
from models.series_models import SliceSeries
from pipeline.commands import SuiteCommand, CaseBody, Check, within, at_least, holds, combine
from services.algebra.sampling import sample, random_unit
from services.geometry.quaternionic import (
    quaternionic_bounds, julia_check, t_transform, quotient_check, inner_boundary_estimate
)
from services.series.constructors import (
    mobius, herzig, minda, monomial_rotation, random_series, random_invertible_series,
    random_quaternionic_self_map
)
from services.series.evaluation import evaluate
from services.series.rational import rational_conjugate
from utils.constants import POINTWISE_TOL
from utils.seeding import sample_rngs

RANDOM_MAPS = 100
BOUNDARY_SLACK = 1e-8
INNER_RADII = (0.1, 0.5, 0.9)
MINDA_DELTAS = (1.5, 2.0, 3.0)
HERZIG_PARAMETERS = (-0.5, 0.0, 0.5)
TRANSFORM_DEGREE = 4


def _quaternionic_series(rng: np.random.Generator, invertible: bool = False) -> SliceSeries:
    """Random series with coefficients in H"""
    if invertible:
        return random_invertible_series(rng, TRANSFORM_DEGREE, quaternionic=True)
    return random_series(rng, TRANSFORM_DEGREE, quaternionic=True)


class QuaternionSuiteCommand(SuiteCommand):
    """Estimates that hold for quaternionic self-maps of the unit ball"""

    name = "quaternion"

    def cases(self) -> List[Tuple[str, CaseBody]]:
        return [
            ("mobius_sharp_vs_osserman", self.mobius_sharp_vs_osserman),
            ("square_order_bound", self.square_order_bound),
            ("bound_ordering", self.bound_ordering),
            ("herzig_equality", self.herzig_equality),
            ("julia_mobius_equality", self.julia_mobius_equality),
            ("julia_random_maps", self.julia_random_maps),
            ("julia_square_instance", self.julia_square_instance),
            ("t_transform_round_trip", self.t_transform_round_trip),
            ("regular_quotient_pointwise", self.regular_quotient_pointwise),
            ("inner_estimate_minda", self.inner_estimate_minda),
            ("inner_estimate_square", self.inner_estimate_square),
            ("inner_estimate_random", self.inner_estimate_random),
        ]

    # Boundary bounds

    def mobius_sharp_vs_osserman(self, rng: np.random.Generator) -> Check:
        """a = 1/2, xi = 1: delta = 3, sharp bound 3, Osserman bound 1/3"""
        report = quaternionic_bounds(mobius(0.5), ONE)
        tol = self.config.tol_alg
        return combine(
            within(abs(report.delta - 3.0), tol, delta=report.delta),
            within(abs(report.sharp_bound - 3.0), tol, sharp=report.sharp_bound),
            within(abs(report.osserman_bound - 1.0 / 3.0), tol, osserman=report.osserman_bound),
            within(abs(report.weak_bound - 3.0), tol, weak=report.weak_bound),
        )

    def square_order_bound(self, rng: np.random.Generator) -> Check:
        """q^2 at xi = 1: the order-2 refinement degenerates to exactly 2"""
        report = quaternionic_bounds(monomial_rotation(2, ONE), ONE)
        return combine(
            within(abs(report.delta - 2.0), self.config.tol_alg, delta=report.delta),
            within(abs(report.order_bound - 2.0), self.config.tol_alg, order_bound=report.order_bound),
            holds(report.extremal and report.vanishing_order == 2, order=report.vanishing_order),
        )

    def bound_ordering(self, rng: np.random.Generator) -> Check:
        """delta >= sharp >= weak >= osserman on random self-maps"""
        gaps, residuals = [], []
        for sub in sample_rngs(rng, RANDOM_MAPS):
            f, xi = random_quaternionic_self_map(sub)
            report = quaternionic_bounds(f, xi)
            gaps.append(min(
                report.delta - report.sharp_bound,
                report.sharp_bound - report.weak_bound,
                report.weak_bound - report.osserman_bound,
                report.delta - report.contact_bound,
            ))
            residuals.append(report.imag_residual)
        return combine(
            at_least(min(gaps), BOUNDARY_SLACK, maps=RANDOM_MAPS),
            within(max(residuals), BOUNDARY_SLACK, worst_residual=max(residuals)),
        )

    def herzig_equality(self, rng: np.random.Generator) -> Check:
        """The extremal maps of the sharp bound attain it"""
        worst = 0.0
        for a in HERZIG_PARAMETERS:
            f0 = 0.5 * sample(rng, 'quaternion-ball')
            xi = sample(rng, 'quaternion-sphere')
            c = sample(rng, 'quaternion-sphere')
            report = quaternionic_bounds(herzig(a, f0, xi, c), xi)
            worst = max(worst, abs(report.delta - report.sharp_bound) / max(1.0, report.delta))
        return within(worst, BOUNDARY_SLACK, parameters=list(HERZIG_PARAMETERS))

    # Julia

    def julia_mobius_equality(self, rng: np.random.Generator) -> Check:
        worst = 0.0
        for sub in sample_rngs(rng, RANDOM_MAPS):
            f = mobius(float(sub.uniform(-0.9, 0.9)))
            xi = sample(sub, 'quaternion-sphere')
            q = 0.9 * sample(sub, 'quaternion-ball')
            delta = quaternionic_bounds(f, xi).delta
            result = julia_check(f, xi, evaluate(f, xi), delta, q)
            worst = max(worst, abs(result.margin) / max(1.0, abs(result.lhs)))
        return within(worst, POINTWISE_TOL, maps=RANDOM_MAPS)

    def julia_random_maps(self, rng: np.random.Generator) -> Check:
        worst = np.inf
        for sub in sample_rngs(rng, RANDOM_MAPS):
            f, xi = random_quaternionic_self_map(sub)
            q = 0.9 * sample(sub, 'quaternion-ball')
            delta = quaternionic_bounds(f, xi).delta
            worst = min(worst, julia_check(f, xi, evaluate(f, xi), delta, q).margin)
        return at_least(worst, BOUNDARY_SLACK, maps=RANDOM_MAPS)

    def julia_square_instance(self, rng: np.random.Generator) -> Check:
        """q^2 with xi = eta = 1, alpha = 2 at q = 1/2: lhs 5/3, rhs 3/2"""
        result = julia_check(monomial_rotation(2, ONE), ONE, ONE, 2.0, Octonion(0.5))
        return combine(
            within(abs(result.lhs - 5.0 / 3.0), self.config.tol_alg, lhs=result.lhs),
            within(abs(result.rhs - 1.5), self.config.tol_alg, rhs=result.rhs),
            holds(result.holds),
        )

    # Pointwise quotient

    def t_transform_round_trip(self, rng: np.random.Generator) -> Check:
        """T_{f^c}(T_f(q)) = q"""
        worst = 0.0
        for sub in sample_rngs(rng, self.config.samples):
            f = _quaternionic_series(sub, invertible=True)
            q = sample(sub, 'quaternion-ball')
            back = t_transform(rational_conjugate(f), t_transform(f, q))
            worst = max(worst, (back - q).norm())
        return within(worst, POINTWISE_TOL, samples=self.config.samples)

    def regular_quotient_pointwise(self, rng: np.random.Generator) -> Check:
        """f^{-*} * g(q) = f(T_f(q))^{-1} g(T_f(q))"""
        worst = 0.0
        for sub in sample_rngs(rng, self.config.samples):
            f = _quaternionic_series(sub, invertible=True)
            g = _quaternionic_series(sub)
            q = sample(sub, 'quaternion-ball')
            worst = max(worst, quotient_check(f, g, q))
        return within(worst, POINTWISE_TOL, samples=self.config.samples)

    # Inner boundary estimate

    def inner_estimate_minda(self, rng: np.random.Generator) -> Check:
        """Equality in both inner estimates for the Minda-type extremal maps"""
        worst = 0.0
        for delta in MINDA_DELTAS:
            xi = random_unit(rng, quaternionic=True)
            c = random_unit(rng, quaternionic=True)
            f = minda(delta, xi, c)
            for t in INNER_RADII:
                result = inner_boundary_estimate(f, xi, t, delta=delta)
                worst = max(worst, abs(result.inner_margin), abs(result.second_derivative_margin))
        return within(worst, POINTWISE_TOL, deltas=list(MINDA_DELTAS))

    def inner_estimate_square(self, rng: np.random.Generator) -> Check:
        """q^2 at xi = 1: second-derivative and order-2 estimates are equalities"""
        f = monomial_rotation(2, ONE)
        results = [inner_boundary_estimate(f, ONE, t, order=2) for t in INNER_RADII]
        return combine(
            at_least(min(result.inner_margin for result in results), BOUNDARY_SLACK),
            within(max(abs(result.second_derivative_margin) for result in results), POINTWISE_TOL),
            within(max(abs(result.order_margin) for result in results), POINTWISE_TOL),
        )

    def inner_estimate_random(self, rng: np.random.Generator) -> Check:
        worst = np.inf
        for sub in sample_rngs(rng, RANDOM_MAPS):
            f, xi = random_quaternionic_self_map(sub)
            t = float(sub.uniform(0.05, 0.95))
            worst = min(worst, inner_boundary_estimate(f, xi, t).margin)
        return at_least(worst, BOUNDARY_SLACK, maps=RANDOM_MAPS)
