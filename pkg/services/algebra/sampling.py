"""
Random octonion sampling, random frames and low-discrepancy direction sets
"""

from typing import Optional

import numpy as np
from scipy.stats import qmc, norm

from models.multiplication_table import DIMENSION, table_product
from models.octonion import Octonion, UnitImaginary, Frame
from utils.constants import DIAMETER_DIRECTIONS
from utils.exceptions import BadParameter

SAMPLE_TARGETS = (
    'ball',
    'sphere',
    'unit-imaginary',
    'algebra',
    'quaternion-ball',
    'quaternion-sphere',
    'quaternion-unit',
)


def _normalize_rows(array: np.ndarray) -> np.ndarray:
    return array / np.linalg.norm(array, axis=-1, keepdims=True)


def sample_components(rng: np.random.Generator, target: str, size: int = 1) -> np.ndarray:
    """
    Draw `size` octonions as a (size, 8) array.

    Targets:
        ball: uniform on the open unit ball of R^8 (radius U^(1/8))
        sphere: uniform on the unit sphere
        unit-imaginary: uniform on the 6-sphere of imaginary units
        algebra: isotropic Gaussian components
        quaternion-ball / quaternion-sphere / quaternion-unit: the same inside H
    """
    if target not in SAMPLE_TARGETS:
        raise BadParameter(f"Unknown sample target '{target}'", context={'targets': SAMPLE_TARGETS})

    quaternionic = target.startswith('quaternion')
    active = 4 if quaternionic else DIMENSION
    gaussian = np.zeros((size, DIMENSION))
    gaussian[:, :active] = rng.standard_normal((size, active))

    if target == 'algebra':
        return gaussian
    if target in ('unit-imaginary', 'quaternion-unit'):
        gaussian[:, 0] = 0.0
        return _normalize_rows(gaussian)

    directions = _normalize_rows(gaussian)
    if target in ('sphere', 'quaternion-sphere'):
        return directions
    radii = rng.random(size) ** (1.0 / active)
    return directions * radii[:, None]


def sample(rng: np.random.Generator, target: str) -> Octonion:
    """Single deterministic draw for the given generator state"""
    return Octonion(sample_components(rng, target, 1)[0])


def sample_unit_imaginary(rng: np.random.Generator, quaternionic: bool = False) -> UnitImaginary:
    target = 'quaternion-unit' if quaternionic else 'unit-imaginary'
    return UnitImaginary(sample(rng, target))


def _orthogonal_unit(rng: np.random.Generator, against: list) -> UnitImaginary:
    """Random imaginary unit perpendicular to every vector in `against`"""
    for _ in range(16):
        candidate = rng.standard_normal(DIMENSION)
        candidate[0] = 0.0
        for vector in against:
            candidate -= np.dot(candidate, vector) * vector
        length = np.linalg.norm(candidate)
        if length > 1e-6:
            return UnitImaginary(Octonion(candidate / length))
    raise BadParameter("Could not draw an orthogonal imaginary unit")


def random_frame(rng: np.random.Generator) -> Frame:
    """Frame (I, J, K) built by Gram-Schmidt against {I} and {I, J, IJ}"""
    unit_i = sample_unit_imaginary(rng)
    unit_j = _orthogonal_unit(rng, [unit_i.components])
    ij = table_product(unit_i.components, unit_j.components)
    unit_k = _orthogonal_unit(rng, [unit_i.components, unit_j.components, ij])
    return Frame(unit_i, unit_j, unit_k)


def direction_set(rng: np.random.Generator, count: int = DIAMETER_DIRECTIONS,
                  quaternionic: bool = False) -> np.ndarray:
    """
    Unit directions for diameter sampling.

    Scrambled Sobol points pushed through the normal quantile and normalized,
    followed by the signed basis directions.

    Args:
        rng: Generator seeding the Sobol scramble
        count: Number of low-discrepancy directions (a power of two)
        quaternionic: Restrict directions to H

    Returns:
        (count + 2 * dim, 8) array of unit rows
    """
    active = 4 if quaternionic else DIMENSION
    sobol = qmc.Sobol(d=active, scramble=True, seed=rng)
    points = np.clip(sobol.random(count), 1e-12, 1.0 - 1e-12)
    directions = np.zeros((count, DIMENSION))
    directions[:, :active] = _normalize_rows(norm.ppf(points))

    basis = np.eye(DIMENSION)[:active]
    signed = np.vstack([basis, -basis])
    return np.vstack([directions, signed])


def random_unit(rng: np.random.Generator, quaternionic: bool = False, imaginary: bool = False) -> Octonion:
    if imaginary:
        return sample_unit_imaginary(rng, quaternionic).value
    return sample(rng, 'quaternion-sphere' if quaternionic else 'sphere')


def circle_points(count: int, offset: Optional[float] = 0.0) -> np.ndarray:
    """Equispaced angles on [0, 2pi)"""
    return offset + 2.0 * np.pi * np.arange(count) / count
