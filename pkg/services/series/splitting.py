"""
Splitting of a series into four holomorphic components relative to a frame (I, J, K)

Writing a_n = sum_m c_{m,n} b_m over the basis b = [1, I, J, IJ, K, IK, JK, (IJ)K],
the components are F1 = c0 + c1 i, F2 = c2 + c3 i, F3 = c4 + c5 i and
F4 = c6 - c7 i, where i stands for I. On C_I

    f(z) = F1(z) + F2(z) J + (F3(z) + conj(F4(z)) J) K.
"""

import numpy as np
from numpy.polynomial import polynomial as P

from models.multiplication_table import table_product
from models.octonion import Frame
from models.series_models import SliceSeries, SplitComponents


def _basis_matrix(frame: Frame) -> np.ndarray:
    return np.vstack([b.components for b in frame.basis()])


def split(f: SliceSeries, frame: Frame) -> SplitComponents:
    """Per-coefficient decomposition into F1..F4"""
    c = f.coeffs @ _basis_matrix(frame).T
    components = np.vstack([
        c[:, 0] + 1j * c[:, 1],
        c[:, 2] + 1j * c[:, 3],
        c[:, 4] + 1j * c[:, 5],
        c[:, 6] - 1j * c[:, 7],
    ])
    return SplitComponents(frame=frame, components=components)


def component_values(components: SplitComponents, z: np.ndarray) -> np.ndarray:
    """F1..F4 at the complex points z, shape (4, M)"""
    z = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    return np.vstack([P.polyval(z, row) for row in components.components])


def recombine_values(values: np.ndarray, frame: Frame) -> np.ndarray:
    """
    Octonion values from component values H1..H4 at the same points.

    Args:
        values: (4, M) complex values
        frame: Frame whose I plays the role of i

    Returns:
        (M, 8) octonion values
    """
    i, j, k = frame.I.components, frame.J.components, frame.K.components

    def embed(c: np.ndarray) -> np.ndarray:
        return np.outer(c.real, np.eye(8)[0]) + np.outer(c.imag, i)

    first = embed(values[0]) + table_product(embed(values[1]), j)
    inner_block = embed(values[2]) + table_product(embed(np.conj(values[3])), j)
    return first + table_product(inner_block, k)


def recombine(components: SplitComponents, z: np.ndarray) -> np.ndarray:
    """f(z) for z in C_I from its components"""
    return recombine_values(component_values(components, z), components.frame)


def splitting_star(f: SliceSeries, g: SliceSeries, frame: Frame, z: np.ndarray) -> np.ndarray:
    """
    Values of f * g on C_I from the component product rule.

    With F = F(z) and F~ = conj(F(conj z)):
        H1 = F1 G1 - F2 G2~ - F3 G3~ - F4 G4~
        H2 = F1 G2 + F2 G1~ + F3~ G4~ - F4~ G3~
        H3 = F1 G3 - F2~ G4~ + F3 G1~ + F4~ G2~
        H4 = F1 G4 + F2~ G3~ - F3~ G2~ + F4 G1~
    """
    z = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    fs, gs = split(f, frame), split(g, frame)
    F = component_values(fs, z)
    G = component_values(gs, z)
    Ft = np.conj(component_values(fs, np.conj(z)))
    Gt = np.conj(component_values(gs, np.conj(z)))

    H = np.vstack([
        F[0] * G[0] - F[1] * Gt[1] - F[2] * Gt[2] - F[3] * Gt[3],
        F[0] * G[1] + F[1] * Gt[0] + Ft[2] * Gt[3] - Ft[3] * Gt[2],
        F[0] * G[2] - Ft[1] * Gt[3] + F[2] * Gt[0] + Ft[3] * Gt[1],
        F[0] * G[3] + Ft[1] * Gt[2] - Ft[2] * Gt[1] + F[3] * Gt[0],
    ])
    return recombine_values(H, frame)
