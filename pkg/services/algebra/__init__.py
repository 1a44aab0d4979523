"""
Octonion algebra: products, involutions, Cayley-Dickson oracle and sampling
"""

from .operations import (
    mul, involutions, inner, associator, bracket, wedge, inverse,
    imaginary_unit_of, slice_coordinates
)
from .cayley_dickson import cayley_dickson_mul
from .sampling import sample, sample_components, random_frame, direction_set

__all__ = [
    'mul',
    'involutions',
    'inner',
    'associator',
    'bracket',
    'wedge',
    'inverse',
    'imaginary_unit_of',
    'slice_coordinates',
    'cayley_dickson_mul',
    'sample',
    'sample_components',
    'random_frame',
    'direction_set'
]
