"""
Zero-counting battery for the argument principle on symmetric neighbourhoods
"""

from typing import Dict, List, Tuple

import numpy as np

from models.octonion import Octonion, UnitImaginary
from models.series_models import RegularRational
from models.zero_models import ContourSpec
from pipeline.commands import SuiteCommand, CaseBody, Check, within, holds, combine, relative
from services.series.calculus import star
from services.series.constructors import polynomial, random_invertible_series
from services.series.evaluation import slice_vector
from services.series.rational import rational_star
from services.zeros.argument_principle import contour_count, log_derivative
from utils.constants import COUNT_GUARD, SLICE_INDEPENDENCE_TOL, DEFAULT_CONTOUR_NODES
from utils.seeding import sample_rngs

HALVING_TOL = 1e-6
LOG_DERIVATIVE_DEGREE = 4


def _reference_cases(nodes: int = DEFAULT_CONTOUR_NODES) -> Dict[str, Tuple[RegularRational, ContourSpec, int]]:
    """Function, contour and expected f^s count"""
    e1, e2 = Octonion.basis(1), Octonion.basis(2)
    upper = ContourSpec(x0=0.0, y0=1.0, delta=0.3, I=UnitImaginary(e2), M=nodes)
    return {
        'q_minus_e1': (polynomial([-e1, 1.0]), upper, 2),
        'one': (polynomial([1.0]), ContourSpec(x0=0.0, y0=0.0, delta=0.5, I=UnitImaginary(e1), M=nodes), 0),
        'q_squared_plus_one': (polynomial([1.0, 0.0, 1.0]), upper, 4),
        'q_minus_half': (polynomial([-0.5, 1.0]), ContourSpec(x0=0.5, y0=0.0, delta=0.2, I=UnitImaginary(e1), M=nodes), 2),
    }


class ZerosSuiteCommand(SuiteCommand):
    """Integer-exact, slice-independent counts of the zeros of f^s"""

    name = "zeros"

    def cases(self) -> List[Tuple[str, CaseBody]]:
        return [
            ("reference_counts", self.reference_counts),
            ("node_halving", self.node_halving),
            ("product_additivity", self.product_additivity),
            ("log_derivative_additivity", self.log_derivative_additivity),
        ]

    def reference_counts(self, rng: np.random.Generator) -> Check:
        outcomes = {}
        checks = []
        for label, (function, spec, expected) in _reference_cases().items():
            result = contour_count(function, spec, rng)
            outcomes[label] = result.to_dict()
            checks.extend([
                holds(result.count == expected, **{f'{label}_expected': expected}),
                within(result.guard, COUNT_GUARD),
                within(result.slice_deviation, SLICE_INDEPENDENCE_TOL),
            ])
        return combine(*checks, holds(True, counts=outcomes))

    def node_halving(self, rng: np.random.Generator) -> Check:
        """Halving M changes the raw integral by less than 1e-6"""
        fine = _reference_cases(DEFAULT_CONTOUR_NODES)
        coarse = _reference_cases(DEFAULT_CONTOUR_NODES // 2)
        changes = {
            label: abs(contour_count(function, spec).raw - contour_count(coarse[label][0], coarse[label][1]).raw)
            for label, (function, spec, _) in fine.items()
        }
        return within(max(changes.values()), HALVING_TOL, changes=changes)

    def product_additivity(self, rng: np.random.Generator) -> Check:
        """count(f * g) = count(f) + count(g)"""
        cases = _reference_cases()
        f, spec, _ = cases['q_minus_e1']
        g, _, _ = cases['q_squared_plus_one']
        combined = contour_count(rational_star(f, g), spec, rng).count
        separate = contour_count(f, spec, rng).count + contour_count(g, spec, rng).count
        return holds(combined == separate, product=combined, separate=separate)

    def log_derivative_additivity(self, rng: np.random.Generator) -> Check:
        """L_{f*g} = L_f + L_g on random complex points"""
        worst = 0.0
        for sub in sample_rngs(rng, self.config.samples):
            f = random_invertible_series(sub, LOG_DERIVATIVE_DEGREE)
            g = random_invertible_series(sub, LOG_DERIVATIVE_DEGREE)
            z = 0.5 * np.sqrt(sub.random(4)) * np.exp(2j * np.pi * sub.random(4))
            product = slice_vector(log_derivative(star(f, g)), z)[:, 0]
            parts = slice_vector(log_derivative(f), z)[:, 0] + slice_vector(log_derivative(g), z)[:, 0]
            worst = max(worst, relative(product - parts, parts))
        return within(worst, self.config.tol_series, samples=self.config.samples)
