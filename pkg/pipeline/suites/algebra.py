"""
Octonion algebra battery: table against Cayley-Dickson and the weak associativity laws
"""

from typing import List, Tuple

import numpy as np

from models.multiplication_table import DIMENSION, table_product, conjugate_components
from pipeline.commands import SuiteCommand, CaseBody, Check, within, holds
from services.algebra.cayley_dickson import cayley_dickson_components
from services.algebra.operations import associator_components, inverse_components
from services.algebra.sampling import sample_components
from utils.constants import ALGEBRA_SAMPLE_FACTOR, IDENTITY_TOL


def _norms(a: np.ndarray) -> np.ndarray:
    return np.linalg.norm(a, axis=-1)


def _worst(difference: np.ndarray, scale: np.ndarray) -> float:
    """Largest row norm of difference relative to the matching scale"""
    return float(np.max(_norms(difference) / np.maximum(scale, 1e-300)))


class AlgebraSuiteCommand(SuiteCommand):
    """Identities of the octonion product on random samples"""

    name = "algebra"

    @property
    def count(self) -> int:
        return self.config.samples * ALGEBRA_SAMPLE_FACTOR

    def _triple(self, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        return tuple(sample_components(rng, 'algebra', self.count) for _ in range(3))

    def cases(self) -> List[Tuple[str, CaseBody]]:
        return [
            ("fano_basis_table", self.fano_basis_table),
            ("fano_random_pairs", self.fano_random_pairs),
            ("moufang", self.moufang),
            ("alternativity", self.alternativity),
            ("norm_multiplicative", self.norm_multiplicative),
            ("unit_multipliers", self.unit_multipliers),
            ("associator_orthogonal", self.associator_orthogonal),
            ("associator_real_part", self.associator_real_part),
            ("conjugation_reverses_products", self.conjugation_reverses_products),
            ("inverse", self.inverse),
            ("wedge_relation", self.wedge_relation),
        ]

    def fano_basis_table(self, rng: np.random.Generator) -> Check:
        basis = np.eye(DIMENSION)
        table = table_product(basis[:, None, :], basis[None, :, :])
        doubled = cayley_dickson_components(basis[:, None, :], basis[None, :, :])
        mismatches = int(np.count_nonzero(table != doubled))
        return holds(mismatches == 0, mismatches=mismatches)

    def fano_random_pairs(self, rng: np.random.Generator) -> Check:
        x, y, _ = self._triple(rng)
        difference = table_product(x, y) - cayley_dickson_components(x, y)
        return within(_worst(difference, _norms(x) * _norms(y)), self.config.tol_alg, samples=self.count)

    def moufang(self, rng: np.random.Generator) -> Check:
        x, y, z = self._triple(rng)
        scale = _norms(x) * _norms(y) * _norms(z) ** 2
        first = table_product(z, table_product(x, table_product(z, y))) - \
            table_product(table_product(table_product(z, x), z), y)
        second = table_product(table_product(table_product(x, z), y), z) - \
            table_product(x, table_product(z, table_product(y, z)))
        third = table_product(table_product(z, x), table_product(y, z)) - \
            table_product(table_product(z, table_product(x, y)), z)
        deviation = max(_worst(first, scale), _worst(second, scale), _worst(third, scale))
        return within(deviation, IDENTITY_TOL, samples=self.count)

    def alternativity(self, rng: np.random.Generator) -> Check:
        x, y, _ = self._triple(rng)
        scale = _norms(x) ** 2 * _norms(y)
        left = associator_components(x, x, y)
        right = associator_components(y, x, x)
        flexible = associator_components(x, y, x)
        deviation = max(_worst(left, scale), _worst(right, scale), _worst(flexible, scale))
        return within(deviation, IDENTITY_TOL, samples=self.count)

    def norm_multiplicative(self, rng: np.random.Generator) -> Check:
        x, y, _ = self._triple(rng)
        expected = _norms(x) * _norms(y)
        deviation = float(np.max(np.abs(_norms(table_product(x, y)) - expected) / expected))
        return within(deviation, IDENTITY_TOL, samples=self.count)

    def unit_multipliers(self, rng: np.random.Generator) -> Check:
        """<ax, ay> = <xa, ya> = <x, y> for unit a"""
        x, y, _ = self._triple(rng)
        a = sample_components(rng, 'sphere', self.count)
        expected = np.sum(x * y, axis=1)
        scale = _norms(x) * _norms(y)
        left = np.sum(table_product(a, x) * table_product(a, y), axis=1) - expected
        right = np.sum(table_product(x, a) * table_product(y, a), axis=1) - expected
        deviation = float(np.max(np.maximum(np.abs(left), np.abs(right)) / scale))
        return within(deviation, IDENTITY_TOL, samples=self.count)

    def associator_orthogonal(self, rng: np.random.Generator) -> Check:
        """<u, [u, v, w]> = 0"""
        u, v, w = self._triple(rng)
        products = np.sum(u * associator_components(u, v, w), axis=1)
        deviation = float(np.max(np.abs(products) / (_norms(u) ** 2 * _norms(v) * _norms(w))))
        return within(deviation, IDENTITY_TOL, samples=self.count)

    def associator_real_part(self, rng: np.random.Generator) -> Check:
        u, v, w = self._triple(rng)
        real = associator_components(u, v, w)[:, 0]
        deviation = float(np.max(np.abs(real) / (_norms(u) * _norms(v) * _norms(w))))
        return within(deviation, IDENTITY_TOL, samples=self.count)

    def conjugation_reverses_products(self, rng: np.random.Generator) -> Check:
        x, y, _ = self._triple(rng)
        difference = conjugate_components(table_product(x, y)) - \
            table_product(conjugate_components(y), conjugate_components(x))
        return within(_worst(difference, _norms(x) * _norms(y)), IDENTITY_TOL, samples=self.count)

    def inverse(self, rng: np.random.Generator) -> Check:
        x, _, _ = self._triple(rng)
        product = table_product(x, inverse_components(x))
        product[:, 0] -= 1.0
        return within(float(np.max(_norms(product))), IDENTITY_TOL, samples=self.count)

    def wedge_relation(self, rng: np.random.Generator) -> Check:
        """IJ = -<I, J> + (IJ - JI)/2 for unit imaginaries"""
        i = sample_components(rng, 'unit-imaginary', self.count)
        j = sample_components(rng, 'unit-imaginary', self.count)
        ij = table_product(i, j)
        expected = 0.5 * (ij - table_product(j, i))
        expected[:, 0] -= np.sum(i * j, axis=1)
        return within(float(np.max(_norms(ij - expected))), IDENTITY_TOL, samples=self.count)
