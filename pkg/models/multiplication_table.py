"""
Signed index table for octonion basis products

The table is generated once from the seven Fano triples. For every triple
(i, j, k) and its cyclic shifts e_i e_j = e_k, while the reversed products
change sign, and e_i e_i = -1.
"""

from typing import Tuple

import numpy as np

FANO_TRIPLES: Tuple[Tuple[int, int, int], ...] = (
    (1, 2, 3),
    (1, 4, 5),
    (2, 4, 6),
    (3, 4, 7),
    (5, 3, 6),
    (6, 1, 7),
    (7, 2, 5),
)

DIMENSION = 8


def build_index_table() -> Tuple[np.ndarray, np.ndarray]:
    """
    Build the (index, sign) tables with e_i e_j = sign[i, j] * e_{index[i, j]}.

    Returns:
        Tuple of two 8x8 integer arrays
    """
    index = np.zeros((DIMENSION, DIMENSION), dtype=np.int64)
    sign = np.zeros((DIMENSION, DIMENSION), dtype=np.int64)

    for i in range(DIMENSION):
        index[0, i], sign[0, i] = i, 1
        index[i, 0], sign[i, 0] = i, 1
    for i in range(1, DIMENSION):
        index[i, i], sign[i, i] = 0, -1

    for a, b, c in FANO_TRIPLES:
        for i, j, k in ((a, b, c), (b, c, a), (c, a, b)):
            index[i, j], sign[i, j] = k, 1
            index[j, i], sign[j, i] = k, -1

    if np.any(sign == 0):
        raise RuntimeError("Fano triples do not cover every basis pair")
    return index, sign


INDEX_TABLE, SIGN_TABLE = build_index_table()


def _structure_constants() -> np.ndarray:
    """Flattened structure tensor: row i*8+j holds sign at column index[i, j]."""
    structure = np.zeros((DIMENSION * DIMENSION, DIMENSION), dtype=np.float64)
    for i in range(DIMENSION):
        for j in range(DIMENSION):
            structure[i * DIMENSION + j, INDEX_TABLE[i, j]] = SIGN_TABLE[i, j]
    structure.setflags(write=False)
    return structure


STRUCTURE = _structure_constants()


def table_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    Octonion product on component arrays of shape (..., 8), with broadcasting.

    Args:
        a: Left factors
        b: Right factors

    Returns:
        Array of products with the broadcast shape of a and b
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    outer = a[..., :, None] * b[..., None, :]
    return outer.reshape(outer.shape[:-2] + (DIMENSION * DIMENSION,)) @ STRUCTURE


def conjugate_components(a: np.ndarray) -> np.ndarray:
    """Negate the imaginary components of (..., 8) arrays."""
    result = np.array(a, dtype=np.float64, copy=True)
    result[..., 1:] *= -1.0
    return result
