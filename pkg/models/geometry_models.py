"""
Data models for boundary Schwarz quantities, diameters and geometric checks
"""

from dataclasses import dataclass, field, asdict
from enum import Enum
from typing import Any, Dict, List, Optional


class DiameterKind(Enum):
    """Diameter surrogate being estimated"""
    REGULAR = "regular"
    SLICE = "slice"
    EUCLIDEAN = "euclidean"


@dataclass
class BoundaryReport:
    """Boundary derivative of |f| at a contact point together with its lower bounds"""
    delta: float
    contact_bound: float
    imag_residual: float
    fd_crosscheck: float
    raw_value: List[float] = field(default_factory=list)
    sharp_bound: Optional[float] = None
    osserman_bound: Optional[float] = None
    weak_bound: Optional[float] = None
    fixed_point_bound: Optional[float] = None
    vanishing_order: int = 0
    order_bound: Optional[float] = None
    order_weak_bound: Optional[float] = None
    extremal: bool = False
    derivative_modulus: Optional[float] = None
    modulus_bound: Optional[float] = None

    def bounds(self) -> Dict[str, float]:
        """All lower bounds for delta that were computed"""
        candidates = {
            'contact_bound': self.contact_bound,
            'sharp_bound': self.sharp_bound,
            'osserman_bound': self.osserman_bound,
            'weak_bound': self.weak_bound,
            'fixed_point_bound': self.fixed_point_bound,
            'order_bound': self.order_bound,
            'order_weak_bound': self.order_weak_bound,
        }
        return {name: value for name, value in candidates.items() if value is not None}

    @property
    def margin(self) -> float:
        """delta minus the strongest computed bound (negative = violation)"""
        return self.delta - max(self.bounds().values())

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class DiameterEstimate:
    """Sampled diameter of f(rB)"""
    kind: DiameterKind
    r: float
    value: float
    n_samples: int

    def to_dict(self) -> Dict[str, Any]:
        return {'kind': self.kind.value, 'r': self.r, 'value': self.value, 'n_samples': self.n_samples}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DiameterEstimate":
        return cls(
            kind=DiameterKind(data['kind']),
            r=float(data['r']),
            value=float(data['value']),
            n_samples=int(data['n_samples'])
        )


@dataclass
class JuliaResult:
    """Both sides of the Julia inequality at a point"""
    lhs: float
    rhs: float
    holds: bool

    @property
    def margin(self) -> float:
        return self.lhs - self.rhs


@dataclass
class PointwiseStarResult:
    """Deviations of the pointwise forms of the regular product"""
    quat_identity: Optional[float] = None
    octo_inner_identity: Optional[float] = None
    octo_modulus_identity: Optional[float] = None
    pointwise_deviation: Optional[float] = None


@dataclass
class CauchyEstimate:
    """|a_n| against half the sampled diameter of f(B)"""
    lhs: float
    rhs: float
    margin: float


@dataclass
class LandauToeplitzReport:
    """Regular diameters on a radius grid for a normalized map"""
    radii: List[float]
    diameters: List[float]
    bound_margins: List[float]
    ratio_monotone: bool
    derivative_at_zero: float

    @property
    def margin(self) -> float:
        return min(self.bound_margins)


@dataclass
class GrowthMargins:
    """Signed margins of the growth and distortion inequalities at one point"""
    growth_lower: float
    growth_upper: float
    distortion_lower: float
    distortion_upper: float
    quotient_lower: float
    quotient_upper: float

    @property
    def margin(self) -> float:
        return min(asdict(self).values())

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


@dataclass
class ExtremumReport:
    """Radial-shell scan of |f| on sampled slices"""
    constant: bool
    shell_maxima: List[float]
    outer_shell_max: bool
    real_axis_minima: List[Dict[str, float]] = field(default_factory=list)
    off_axis_minima: List[Dict[str, float]] = field(default_factory=list)
    minima_consistent: bool = True

    @property
    def passed(self) -> bool:
        return self.constant or (self.outer_shell_max and self.minima_consistent)


@dataclass
class InnerEstimateResult:
    """Margins of the inner boundary estimate and its second-derivative corollary at one t"""
    t: float
    inner_margin: float
    second_derivative_margin: float
    order_margin: Optional[float] = None

    @property
    def margin(self) -> float:
        margins = [self.inner_margin, self.second_derivative_margin]
        if self.order_margin is not None:
            margins.append(self.order_margin)
        return min(margins)
