"""
Exception hierarchy for slice-regular calculus and verification
"""

from typing import Optional, Dict, Any


class SliceCalcError(Exception):
    """Base exception for slicecalc operations"""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.context = context or {}

    def __str__(self) -> str:
        if self.context:
            context_str = ", ".join([f"{k}={v}" for k, v in self.context.items()])
            return f"{self.message} (context: {context_str})"
        return self.message


class ZeroDivisor(SliceCalcError):
    """Raised when inverting an octonion of (numerically) zero norm"""
    pass


class PoleAtPoint(SliceCalcError):
    """Raised when a rational function is evaluated at a zero of its denominator"""
    pass


class RealPoint(SliceCalcError):
    """Raised when a spherical quotient is requested at a real point"""
    pass


class ZeroConstantTerm(SliceCalcError):
    """Raised when a series reciprocal is expanded around a vanishing constant term"""
    pass


class BadFrame(SliceCalcError):
    """Raised when I, J, IJ, K are not mutually perpendicular"""
    pass


class BadParameter(SliceCalcError):
    """Raised when a constructor or value receives parameters outside their domain"""
    pass


class NotContactPoint(SliceCalcError):
    """Raised when |f(xi)| differs from 1 at a boundary point"""
    pass


class NonQuaternionic(SliceCalcError):
    """Raised when a quaternion-only check receives octonionic coefficients"""
    pass


class HypothesisViolated(SliceCalcError):
    """Raised when the input does not satisfy the hypotheses of a check"""
    pass


class ZeroAtPoint(SliceCalcError):
    """Raised when a pointwise division form meets a zero of f"""
    pass


class ZeroOfSymmetrization(SliceCalcError):
    """Raised when the symmetrization vanishes at the requested point"""
    pass


class IdenticallyZero(SliceCalcError):
    """Raised when an operation needs a function that is not identically zero"""
    pass


class ZeroOnContour(SliceCalcError):
    """Raised when the symmetrization vanishes on an integration contour"""
    pass


class NonIntegerCount(SliceCalcError):
    """Raised when a contour integral is too far from an integer"""
    pass


class UnknownSuite(SliceCalcError):
    """Raised when a verification suite name is not recognised"""
    pass


class ParseError(SliceCalcError):
    """Raised when a JSON file or point literal cannot be parsed"""
    pass


class ConfigurationError(SliceCalcError):
    """Raised when configuration is invalid or missing"""
    pass
