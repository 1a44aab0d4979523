"""
Maximum and minimum modulus scans on slices of the ball
"""

from dataclasses import dataclass
from typing import List, Dict

import numpy as np

from models.geometry_models import ExtremumReport
from models.octonion import UnitImaginary
from models.series_models import SliceFunction
from services.algebra.sampling import sample_unit_imaginary, circle_points
from services.series.evaluation import evaluate_in_slice
from services.series.remainder import slice_derivative

OFF_AXIS_LIMIT = 10


@dataclass(frozen=True)
class ScanGrid:
    radius: float = 0.95
    shells: int = 24
    angles: int = 128
    slices: int = 8
    real_step: float = 1e-3


def _polar_moduli(function: SliceFunction, grid: ScanGrid, unit: UnitImaginary) -> np.ndarray:
    """|f| on the polar grid of one slice, shape (shells, angles)"""
    radii = grid.radius * np.arange(1, grid.shells + 1) / grid.shells
    z = radii[:, None] * np.exp(1j * circle_points(grid.angles))[None, :]
    values = evaluate_in_slice(function, z.reshape(-1), unit)
    return np.linalg.norm(values, axis=1).reshape(grid.shells, grid.angles)


def _real_axis_minima(function: SliceFunction, grid: ScanGrid,
                      units: List[UnitImaginary]) -> List[Dict[str, float]]:
    """
    Real points where |f| is minimal along the axis and not larger than at
    the off-axis neighbours x + h I of every scanned slice.
    """
    x = np.arange(-grid.radius, grid.radius + grid.real_step / 2, grid.real_step)
    axis = UnitImaginary.basis(1)
    moduli = np.linalg.norm(evaluate_in_slice(function, x.astype(np.complex128), axis), axis=1)
    slopes = np.linalg.norm(evaluate_in_slice(slice_derivative(function), x.astype(np.complex128), axis), axis=1)
    threshold = 10.0 * grid.real_step * float(np.max(slopes))
    interior = np.flatnonzero((moduli[1:-1] < moduli[:-2]) & (moduli[1:-1] <= moduli[2:])) + 1
    minima = []
    for i in interior:
        neighbours = np.array([x[i] + 1j * grid.real_step, x[i] - 1j * grid.real_step])
        lowest = min(float(np.min(np.linalg.norm(evaluate_in_slice(function, neighbours, unit), axis=1)))
                     for unit in units)
        if lowest >= moduli[i]:
            minima.append({'x': float(x[i]), 'value': float(moduli[i]), 'threshold': threshold})
    return minima


def _off_axis_minima(moduli: np.ndarray, grid: ScanGrid) -> List[Dict[str, float]]:
    """Strict local minima of the polar grid away from the real axis"""
    found = []
    centre = moduli[1:-1]
    neighbours = np.stack([
        moduli[:-2], moduli[2:],
        np.roll(centre, 1, axis=1), np.roll(centre, -1, axis=1),
    ])
    shell_idx, angle_idx = np.nonzero(np.all(centre[None] < neighbours, axis=0))
    for shell, angle in zip(shell_idx + 1, angle_idx):
        if angle in (0, grid.angles // 2):
            continue
        found.append({
            'r': float(grid.radius * (shell + 1) / grid.shells),
            'theta': float(circle_points(grid.angles)[angle]),
            'value': float(moduli[shell, angle]),
        })
        if len(found) >= OFF_AXIS_LIMIT:
            break
    return found


def extremum_scan(function: SliceFunction, rng: np.random.Generator, grid: ScanGrid = ScanGrid()) -> ExtremumReport:
    """
    Scan |f| on radial shells of sampled slices.

    For nonconstant f the largest value on each slice must sit on the outermost
    shell, and each interior local minimum on the real axis must be small
    enough to be a zero. Off-axis minima are listed but not judged.
    """
    units = [UnitImaginary.basis(1)] + [sample_unit_imaginary(rng) for _ in range(grid.slices)]
    grids = [_polar_moduli(function, grid, unit) for unit in units]
    stacked = np.stack(grids)
    peak = float(np.max(stacked))
    constant = float(np.ptp(stacked)) <= 1e-14 * max(1.0, peak)
    shell_maxima = np.max(stacked, axis=(0, 2))
    per_slice = np.max(stacked, axis=2)
    outer = bool(np.all(per_slice[:, -1] >= np.max(per_slice, axis=1) - 1e-12 * max(1.0, peak)))

    minima = [] if constant else _real_axis_minima(function, grid, units)
    return ExtremumReport(
        constant=constant,
        shell_maxima=[float(v) for v in shell_maxima],
        outer_shell_max=outer,
        real_axis_minima=minima,
        off_axis_minima=[] if constant else _off_axis_minima(grids[0], grid),
        minima_consistent=all(entry['value'] <= entry['threshold'] for entry in minima),
    )
