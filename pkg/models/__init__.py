"""
Data models for octonions, slice functions and verification reports
"""

from .multiplication_table import FANO_TRIPLES, DIMENSION, table_product
from .octonion import Octonion, UnitImaginary, Frame, ONE, ZERO
from .series_models import SliceSeries, RegularRational, SliceFunction, SplitComponents
from .geometry_models import (
    DiameterKind, BoundaryReport, DiameterEstimate, JuliaResult, PointwiseStarResult,
    CauchyEstimate, LandauToeplitzReport, GrowthMargins, ExtremumReport, InnerEstimateResult
)
from .zero_models import ContourSpec, CountResult
from .pipeline_models import SuiteConfig, CaseResult, Report, BatchReport

__all__ = [
    'FANO_TRIPLES',
    'DIMENSION',
    'table_product',
    'Octonion',
    'UnitImaginary',
    'Frame',
    'ONE',
    'ZERO',
    'SliceSeries',
    'RegularRational',
    'SliceFunction',
    'SplitComponents',
    'DiameterKind',
    'BoundaryReport',
    'DiameterEstimate',
    'JuliaResult',
    'PointwiseStarResult',
    'CauchyEstimate',
    'LandauToeplitzReport',
    'GrowthMargins',
    'ExtremumReport',
    'InnerEstimateResult',
    'ContourSpec',
    'CountResult',
    'SuiteConfig',
    'CaseResult',
    'Report',
    'BatchReport'
]
