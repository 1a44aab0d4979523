"""
Representation formula: values on any slice from values on one slice
"""

import numpy as np

from models.octonion import Octonion, UnitImaginary
from models.series_models import SliceFunction
from services.series.evaluation import evaluate


def representation_formula(value_z: Octonion, value_zbar: Octonion,
                           unit_i: UnitImaginary, unit_j: UnitImaginary) -> Octonion:
    """(f(z) + f(conj z))/2 - J (I (f(z) - f(conj z)))/2 for z = x + yI"""
    i, j = unit_i.value, unit_j.value
    total = value_z + value_zbar
    difference = value_z - value_zbar
    return 0.5 * total - 0.5 * (j * (i * difference))


def representation_eval(function: SliceFunction, x: float, y: float,
                        unit_i: UnitImaginary, unit_j: UnitImaginary) -> Octonion:
    """f(x + yJ) reconstructed from the two values f(x +- yI)"""
    value_z = evaluate(function, Octonion.from_slice(complex(x, y), unit_i.value))
    value_zbar = evaluate(function, Octonion.from_slice(complex(x, -y), unit_i.value))
    return representation_formula(value_z, value_zbar, unit_i, unit_j)


def representation_error(function: SliceFunction, x: float, y: float,
                         unit_i: UnitImaginary, unit_j: UnitImaginary) -> float:
    """|representation_eval - f(x + yJ)|"""
    direct = evaluate(function, Octonion.from_slice(complex(x, y), unit_j.value))
    return float(np.linalg.norm((representation_eval(function, x, y, unit_i, unit_j) - direct).components))
