"""
Boundary Schwarz quantities, diameter estimates and geometric inequality checks
"""

from .boundary import boundary_modulus_derivative, modulus_inequality_check, convex_combination_check
from .quaternionic import (
    quaternionic_bounds, julia_check, t_transform, quotient_check, inner_boundary_estimate, convexity_check
)
from .pointwise import pointwise_star_check, camshaft_search
from .diameters import (
    DiameterSampling, diameters, landau_toeplitz_check, cauchy_estimate_check, cauchy_auxiliary
)
from .growth import growth_distortion_check, quarter_covering_check
from .extremum import ScanGrid, extremum_scan

__all__ = [
    'boundary_modulus_derivative',
    'modulus_inequality_check',
    'convex_combination_check',
    'quaternionic_bounds',
    'julia_check',
    't_transform',
    'quotient_check',
    'inner_boundary_estimate',
    'convexity_check',
    'pointwise_star_check',
    'camshaft_search',
    'DiameterSampling',
    'diameters',
    'landau_toeplitz_check',
    'cauchy_estimate_check',
    'cauchy_auxiliary',
    'growth_distortion_check',
    'quarter_covering_check',
    'ScanGrid',
    'extremum_scan'
]
