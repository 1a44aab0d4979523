"""
Zero counting for slice regular functions
"""

from .argument_principle import log_derivative, contour_count, count_zero_spheres

__all__ = [
    'log_derivative',
    'contour_count',
    'count_zero_spheres'
]
