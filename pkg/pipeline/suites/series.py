"""
Series calculus battery on random pairs of truncated series
"""

from typing import Callable, List, Tuple

import numpy as np

from models.multiplication_table import DIMENSION
from models.octonion import Octonion, UnitImaginary
from models.series_models import SliceSeries
from pipeline.commands import SuiteCommand, CaseBody, Check, within, relative
from services.algebra.sampling import sample, sample_unit_imaginary, random_frame, random_unit
from services.geometry.boundary import convex_combination_check
from services.series.calculus import (
    star, regular_conjugate, symmetrization_coefficients, reciprocal, reciprocal_series
)
from services.series.constructors import random_series, random_invertible_series
from services.series.evaluation import evaluate, evaluate_in_slice
from services.series.remainder import (
    remainder, sphere_derivative, spherical_value, directional_derivative, directional_derivative_fd
)
from services.series.representation import representation_error
from services.series.splitting import splitting_star
from utils.constants import POINTWISE_TOL, DIRECTIONAL_FD_TOL, RANDOM_SERIES_DECAY
from utils.seeding import sample_rngs

POINTS_PER_PAIR = 8


def _disc_points(rng: np.random.Generator, count: int, radius: float = 0.9) -> np.ndarray:
    return radius * np.sqrt(rng.random(count)) * np.exp(2j * np.pi * rng.random(count))


def _slice_series(rng: np.random.Generator, degree: int, unit: UnitImaginary) -> SliceSeries:
    """Random series whose coefficients lie in C_I"""
    scale = RANDOM_SERIES_DECAY ** np.arange(degree + 1)
    real = rng.standard_normal(degree + 1) * scale
    imag = rng.standard_normal(degree + 1) * scale
    return SliceSeries(np.outer(real, np.eye(DIMENSION)[0]) + np.outer(imag, unit.components))


def _point_in_ball(rng: np.random.Generator, radius: float = 0.9) -> Tuple[float, float]:
    """(x, y) with y > 0 and x^2 + y^2 < radius^2"""
    r = radius * np.sqrt(rng.random())
    theta = np.pi * (0.05 + 0.9 * rng.random())
    return float(r * np.cos(theta)), float(r * np.sin(theta))


class SeriesSuiteCommand(SuiteCommand):
    """
    Algebraic identities of the regular product, conjugate, symmetrization and
    reciprocal, checked coefficient-wise at the configured degree, plus pointwise
    identities (splitting, representation formula, remainders).
    """

    name = "series"

    @property
    def degree(self) -> int:
        return self.config.degree

    def cases(self) -> List[Tuple[str, CaseBody]]:
        return [
            ("conjugate_of_product", self.conjugate_of_product),
            ("symmetrization_of_product", self.symmetrization_of_product),
            ("reciprocal_left_inverse", self.reciprocal_left_inverse),
            ("reciprocal_of_product", self.reciprocal_of_product),
            ("reciprocal_rational_form", self.reciprocal_rational_form),
            ("splitting_matches_convolution", self.splitting_matches_convolution),
            ("real_point_product", self.real_point_product),
            ("representation_formula", self.representation_formula_error),
            ("convex_combination", self.convex_combination),
            ("remainder_identity", self.remainder_identity),
            ("sphere_derivative", self.sphere_derivative_value),
            ("directional_derivative", self.directional_derivative_agreement),
        ]

    def _worst(self, rng: np.random.Generator, deviation: Callable[[np.random.Generator], float]) -> float:
        """Largest deviation over config.samples independent draws"""
        return max(deviation(sub) for sub in sample_rngs(rng, self.config.samples))

    def _pair(self, rng: np.random.Generator) -> Tuple[SliceSeries, SliceSeries]:
        return random_series(rng, self.degree), random_series(rng, self.degree)

    def _battery(self, rng: np.random.Generator, deviation: Callable[[np.random.Generator], float]) -> Check:
        return within(self._worst(rng, deviation), self.config.tol_series,
                      samples=self.config.samples, degree=self.degree)

    def _pointwise(self, rng: np.random.Generator, deviation: Callable[[np.random.Generator], float],
                   tol: float = POINTWISE_TOL) -> Check:
        return within(self._worst(rng, deviation), tol, samples=self.config.samples)

    # Coefficient identities

    def conjugate_of_product(self, rng: np.random.Generator) -> Check:
        """(f * g)^c = g^c * f^c"""
        def deviation(sub: np.random.Generator) -> float:
            f, g = self._pair(sub)
            left = regular_conjugate(star(f, g)).coeffs
            right = star(regular_conjugate(g), regular_conjugate(f)).coeffs
            return relative(left - right, left)
        return self._battery(rng, deviation)

    def symmetrization_of_product(self, rng: np.random.Generator) -> Check:
        """(f * g)^s = f^s g^s"""
        def deviation(sub: np.random.Generator) -> float:
            f, g = self._pair(sub)
            left = symmetrization_coefficients(star(f, g))
            right = np.convolve(symmetrization_coefficients(f), symmetrization_coefficients(g))
            return relative(left - right, right)
        return self._battery(rng, deviation)

    def reciprocal_left_inverse(self, rng: np.random.Generator) -> Check:
        """f^{-*} * f = 1 + O(w^{N+1})"""
        def deviation(sub: np.random.Generator) -> float:
            f = random_invertible_series(sub, self.degree)
            inverse = reciprocal_series(f, self.degree)
            product = star(inverse, f).coeffs[:self.degree + 1].copy()
            product[0, 0] -= 1.0
            scale = float(np.max(np.abs(inverse.coeffs))) * float(np.max(np.abs(f.coeffs)))
            return float(np.max(np.abs(product))) / max(1.0, scale)
        return self._battery(rng, deviation)

    def reciprocal_of_product(self, rng: np.random.Generator) -> Check:
        """(f * g)^{-*} = g^{-*} * f^{-*}"""
        def deviation(sub: np.random.Generator) -> float:
            f = random_invertible_series(sub, self.degree)
            g = random_invertible_series(sub, self.degree)
            left = reciprocal_series(star(f, g), self.degree).coeffs
            right = star(reciprocal_series(g, self.degree), reciprocal_series(f, self.degree),
                         degree=self.degree).coeffs
            return relative(left - right, left)
        return self._battery(rng, deviation)

    def reciprocal_rational_form(self, rng: np.random.Generator) -> Check:
        """(f^s)^{-1} f^c agrees with the truncated reciprocal near the origin"""
        def deviation(sub: np.random.Generator) -> float:
            f = random_invertible_series(sub, self.degree)
            exact = reciprocal(f)
            truncated = reciprocal_series(f, self.degree)
            w = sample(sub, 'ball') * 0.1
            difference = evaluate(exact, w) - evaluate(truncated, w)
            return relative(difference.components, evaluate(exact, w).components)
        return self._battery(rng, deviation)

    # Pointwise identities

    def splitting_matches_convolution(self, rng: np.random.Generator) -> Check:
        def deviation(sub: np.random.Generator) -> float:
            f, g = self._pair(sub)
            frame = random_frame(sub)
            z = _disc_points(sub, POINTS_PER_PAIR)
            direct = evaluate_in_slice(star(f, g), z, frame.I)
            split = splitting_star(f, g, frame, z)
            return relative(direct - split, direct)
        return self._battery(rng, deviation)

    def real_point_product(self, rng: np.random.Generator) -> Check:
        """(f * g)(x) = f(x) g(x) on the real axis"""
        def deviation(sub: np.random.Generator) -> float:
            f, g = self._pair(sub)
            x = Octonion(float(sub.uniform(-0.9, 0.9)))
            product = evaluate(star(f, g), x)
            pointwise = evaluate(f, x) * evaluate(g, x)
            return relative((product - pointwise).components, product.components)
        return self._battery(rng, deviation)

    def representation_formula_error(self, rng: np.random.Generator) -> Check:
        def deviation(sub: np.random.Generator) -> float:
            f = random_series(sub, self.degree)
            x, y = _point_in_ball(sub)
            unit_i, unit_j = sample_unit_imaginary(sub), sample_unit_imaginary(sub)
            scale = np.linalg.norm(evaluate(f, Octonion.from_slice(complex(x, y), unit_j.value)).components)
            return representation_error(f, x, y, unit_i, unit_j) / max(1.0, float(scale))
        return self._pointwise(rng, deviation)

    def convex_combination(self, rng: np.random.Generator) -> Check:
        """|f(x+yJ)|^2 as a convex combination of |f(x+-yI)|^2 for C_I coefficients"""
        def deviation(sub: np.random.Generator) -> float:
            unit_i, unit_j = sample_unit_imaginary(sub), sample_unit_imaginary(sub)
            f = _slice_series(sub, self.degree, unit_i)
            x, y = _point_in_ball(sub)
            scale = np.sum(evaluate_in_slice(f, np.array([complex(x, y)]), unit_j) ** 2)
            return convex_combination_check(f, x, y, unit_i, unit_j) / max(1.0, float(scale))
        return self._pointwise(rng, deviation)

    def remainder_identity(self, rng: np.random.Generator) -> Check:
        """f(w) - f(xi) = (w - xi) * R_xi f (w)"""
        def deviation(sub: np.random.Generator) -> float:
            f = random_series(sub, self.degree)
            xi = sample(sub, 'ball') * 0.9
            w = sample(sub, 'ball') * 0.9
            factor = SliceSeries(np.vstack([(-xi).components, np.eye(DIMENSION)[0]]))
            rebuilt = evaluate(star(factor, remainder(f, xi)), w)
            difference = evaluate(f, w) - evaluate(f, xi)
            return relative((rebuilt - difference).components, difference.components)
        return self._pointwise(rng, deviation)

    def sphere_derivative_value(self, rng: np.random.Generator) -> Check:
        """R_xi f(conj xi) equals the sphere derivative off the real axis"""
        def deviation(sub: np.random.Generator) -> float:
            f = random_series(sub, self.degree)
            xi = sample(sub, 'ball') * 0.9
            closed = sphere_derivative(f, xi)
            return relative((closed - spherical_value(f, xi)).components, closed.components)
        return self._pointwise(rng, deviation)

    def directional_derivative_agreement(self, rng: np.random.Generator) -> Check:
        """Closed-form directional derivative against a central difference"""
        def deviation(sub: np.random.Generator) -> float:
            f = random_series(sub, self.degree)
            xi = sample(sub, 'ball') * 0.8
            v = random_unit(sub)
            closed = directional_derivative(f, xi, v)
            numeric = directional_derivative_fd(f, xi, v)
            return relative((closed - numeric).components, closed.components)
        return self._pointwise(rng, deviation, tol=DIRECTIONAL_FD_TOL)
