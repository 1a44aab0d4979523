"""
Data models for argument-principle zero counting
"""

from dataclasses import dataclass
from typing import Any, Dict

from models.octonion import Octonion, UnitImaginary
from utils.constants import DEFAULT_CONTOUR_NODES, MIN_CONTOUR_NODES
from utils.exceptions import BadParameter


@dataclass(frozen=True)
class ContourSpec:
    """Symmetric neighbourhood of the sphere x0 + y0*S, integrated in the slice C_I"""
    x0: float
    y0: float
    delta: float
    I: UnitImaginary
    M: int = DEFAULT_CONTOUR_NODES

    def __post_init__(self):
        if self.delta <= 0:
            raise BadParameter("Contour radius must be positive", context={'delta': self.delta})
        if self.y0 < 0:
            raise BadParameter("y0 must be nonnegative", context={'y0': self.y0})
        if self.y0 > 0 and self.delta >= self.y0:
            raise BadParameter(
                "Discs around x0 +/- y0*I must be disjoint",
                context={'y0': self.y0, 'delta': self.delta}
            )
        if self.M < MIN_CONTOUR_NODES:
            raise BadParameter("Too few contour nodes", context={'M': self.M, 'minimum': MIN_CONTOUR_NODES})

    @property
    def centers(self) -> list:
        """Circle centers as complex numbers of the slice"""
        if self.y0 > 0:
            return [complex(self.x0, self.y0), complex(self.x0, -self.y0)]
        return [complex(self.x0, 0.0)]

    def to_dict(self) -> Dict[str, Any]:
        return {'x0': self.x0, 'y0': self.y0, 'delta': self.delta, 'I': self.I.to_list(), 'M': self.M}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ContourSpec":
        return cls(
            x0=float(data['x0']),
            y0=float(data['y0']),
            delta=float(data['delta']),
            I=UnitImaginary(Octonion(data['I'])),
            M=int(data.get('M', DEFAULT_CONTOUR_NODES))
        )


@dataclass
class CountResult:
    """Value of the log-derivative contour integral and its nearest integer"""
    raw: complex
    count: int
    guard: float
    slice_deviation: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'raw': [float(self.raw.real), float(self.raw.imag)],
            'count': self.count,
            'guard': self.guard,
            'slice_deviation': self.slice_deviation
        }
