"""
Octonion product by Cayley-Dickson doubling of the quaternions

Independent second implementation of the product, used only to cross-check
the Fano index table. An octonion x0..x7 is read as z1 + z2 e4 with
quaternions z1 = (x0..x3) and z2 = (x4..x7).
"""

import numpy as np

from models.octonion import Octonion


def hamilton_product(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Quaternion product on (..., 4) arrays in the order (w, x, y, z)"""
    w1, x1, y1, z1 = np.moveaxis(np.asarray(p, dtype=np.float64), -1, 0)
    w2, x2, y2, z2 = np.moveaxis(np.asarray(q, dtype=np.float64), -1, 0)
    w = w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2
    x = w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2
    y = w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2
    z = w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2
    return np.stack([w, x, y, z], axis=-1)


def quaternion_conjugate(q: np.ndarray) -> np.ndarray:
    result = np.array(q, dtype=np.float64, copy=True)
    result[..., 1:] *= -1.0
    return result


def cayley_dickson_components(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """(z1 + z2 e4)(w1 + w2 e4) = (z1 w1 - conj(w2) z2) + (z2 conj(w1) + w2 z1) e4 on (..., 8) arrays"""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    z1, z2 = a[..., :4], a[..., 4:]
    w1, w2 = b[..., :4], b[..., 4:]
    first = hamilton_product(z1, w1) - hamilton_product(quaternion_conjugate(w2), z2)
    second = hamilton_product(z2, quaternion_conjugate(w1)) + hamilton_product(w2, z1)
    return np.concatenate([first, second], axis=-1)


def cayley_dickson_mul(a: Octonion, b: Octonion) -> Octonion:
    return Octonion(cayley_dickson_components(a.components, b.components))
