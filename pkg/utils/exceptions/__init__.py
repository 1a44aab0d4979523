"""
Exception classes for slicecalc
"""

from .slicecalc_exceptions import (
    SliceCalcError,
    ZeroDivisor,
    PoleAtPoint,
    RealPoint,
    ZeroConstantTerm,
    BadFrame,
    BadParameter,
    NotContactPoint,
    NonQuaternionic,
    HypothesisViolated,
    ZeroAtPoint,
    ZeroOfSymmetrization,
    IdenticallyZero,
    ZeroOnContour,
    NonIntegerCount,
    UnknownSuite,
    ParseError,
    ConfigurationError
)

__all__ = [
    'SliceCalcError',
    'ZeroDivisor',
    'PoleAtPoint',
    'RealPoint',
    'ZeroConstantTerm',
    'BadFrame',
    'BadParameter',
    'NotContactPoint',
    'NonQuaternionic',
    'HypothesisViolated',
    'ZeroAtPoint',
    'ZeroOfSymmetrization',
    'IdenticallyZero',
    'ZeroOnContour',
    'NonIntegerCount',
    'UnknownSuite',
    'ParseError',
    'ConfigurationError'
]
