"""
Slice-regular series and regular rationals: evaluation, calculus, remainders and constructors
"""

from .evaluation import evaluate, evaluate_many, evaluate_in_slice
from .calculus import (
    star, regular_conjugate, symmetrize, reciprocal, reciprocal_series, derivative, compose_with_unit
)
from .rational import (
    rational_star, rational_add, rational_scale, rational_conjugate, rational_reciprocal,
    rational_derivative, shift, taylor_coefficients
)
from .remainder import (
    remainder, second_remainder, sphere_derivative, directional_derivative
)
from .splitting import split, recombine, splitting_star
from .representation import representation_eval
from .constructors import construct

__all__ = [
    'evaluate',
    'evaluate_many',
    'evaluate_in_slice',
    'star',
    'regular_conjugate',
    'symmetrize',
    'reciprocal',
    'reciprocal_series',
    'derivative',
    'compose_with_unit',
    'rational_star',
    'rational_add',
    'rational_scale',
    'rational_conjugate',
    'rational_reciprocal',
    'rational_derivative',
    'shift',
    'taylor_coefficients',
    'remainder',
    'second_remainder',
    'sphere_derivative',
    'directional_derivative',
    'split',
    'recombine',
    'splitting_star',
    'representation_eval',
    'construct'
]
