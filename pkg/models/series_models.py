"""
Data models for truncated slice-regular series and regular rational functions
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Sequence, Union

import numpy as np

from models.multiplication_table import DIMENSION
from models.octonion import Octonion, Frame
from utils.constants import UNIT_TOL
from utils.exceptions import BadParameter


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class SliceSeries:
    """Truncated power series sum w^n a_n with right octonion coefficients"""
    coeffs: np.ndarray
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        array = np.array(self.coeffs, dtype=np.float64)
        if array.ndim == 1 and array.size == DIMENSION:
            array = array.reshape(1, DIMENSION)
        if array.ndim != 2 or array.shape[1] != DIMENSION or array.shape[0] == 0:
            raise BadParameter("Series coefficients must have shape (N+1, 8)", context={'shape': array.shape})
        if not np.all(np.isfinite(array)):
            raise BadParameter("Series coefficients must be finite")
        object.__setattr__(self, 'coeffs', _readonly(array))

    @property
    def degree(self) -> int:
        """Truncation degree N (list length - 1, trailing zeros included)"""
        return self.coeffs.shape[0] - 1

    @classmethod
    def from_octonions(cls, coefficients: Sequence[Union[Octonion, float]]) -> "SliceSeries":
        rows = [c.components if isinstance(c, Octonion) else Octonion(c).components for c in coefficients]
        return cls(np.vstack(rows))

    @classmethod
    def constant(cls, value: Union[Octonion, float]) -> "SliceSeries":
        return cls.from_octonions([value])

    @classmethod
    def monomial(cls, power: int, coefficient: Union[Octonion, float] = 1.0) -> "SliceSeries":
        """w^power * coefficient"""
        if power < 0:
            raise BadParameter("Monomial power must be nonnegative", context={'power': power})
        rows = np.zeros((power + 1, DIMENSION))
        value = coefficient if isinstance(coefficient, Octonion) else Octonion(coefficient)
        rows[power] = value.components
        return cls(rows)

    @classmethod
    def identity(cls) -> "SliceSeries":
        return cls.monomial(1)

    @classmethod
    def from_real(cls, values: Sequence[float]) -> "SliceSeries":
        """Series with real coefficients"""
        values = np.asarray(values, dtype=np.float64).reshape(-1)
        rows = np.zeros((values.size, DIMENSION))
        rows[:, 0] = values
        return cls(rows)

    def coefficient(self, n: int) -> Octonion:
        """a_n, zero beyond the truncation degree"""
        if n > self.degree:
            return Octonion(0.0)
        return Octonion(self.coeffs[n])

    def padded(self, degree: int) -> np.ndarray:
        """Coefficient array zero-padded (or cut) to the given degree"""
        rows = np.zeros((degree + 1, DIMENSION))
        count = min(degree, self.degree) + 1
        rows[:count] = self.coeffs[:count]
        return rows

    def is_real(self, tol: float = UNIT_TOL) -> bool:
        return bool(np.all(np.abs(self.coeffs[:, 1:]) <= tol))

    def is_quaternionic(self, tol: float = UNIT_TOL) -> bool:
        return bool(np.all(np.abs(self.coeffs[:, 4:]) <= tol))

    def is_zero(self, tol: float = 0.0) -> bool:
        return bool(np.all(np.abs(self.coeffs) <= tol))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'degree': self.degree,
            'coeffs': [[float(v) for v in row] for row in self.coeffs]
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SliceSeries":
        coeffs = data['coeffs']
        series = cls(np.asarray(coeffs, dtype=np.float64))
        if 'degree' in data and int(data['degree']) != series.degree:
            raise BadParameter(
                "Declared degree does not match the coefficient list",
                context={'degree': data['degree'], 'coefficients': len(coeffs)}
            )
        return series


@dataclass(frozen=True, eq=False)
class RegularRational:
    """den(w)^-1 * num(w) with a real-coefficient denominator polynomial"""
    num: SliceSeries
    den: np.ndarray

    def __post_init__(self):
        den = np.array(self.den, dtype=np.float64).reshape(-1)
        if den.size == 0 or not np.all(np.isfinite(den)):
            raise BadParameter("Denominator must be a nonempty list of finite reals")
        if not np.any(den != 0.0):
            raise BadParameter("Denominator polynomial is identically zero")
        object.__setattr__(self, 'den', _readonly(den))

    @classmethod
    def from_series(cls, series: SliceSeries) -> "RegularRational":
        return cls(num=series, den=np.ones(1))

    @property
    def den_degree(self) -> int:
        return self.den.size - 1

    def is_quaternionic(self, tol: float = UNIT_TOL) -> bool:
        return self.num.is_quaternionic(tol)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'num': self.num.to_dict(),
            'den': [float(v) for v in self.den]
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RegularRational":
        return cls(num=SliceSeries.from_dict(data['num']), den=np.asarray(data['den'], dtype=np.float64))


SliceFunction = Union[SliceSeries, RegularRational]


@dataclass(frozen=True, eq=False)
class SplitComponents:
    """Holomorphic components F1..F4 of a series relative to a frame (I, J, K)"""
    frame: Frame
    components: np.ndarray  # complex, shape (4, N+1); i stands for the frame unit I

    def __post_init__(self):
        array = np.array(self.components, dtype=np.complex128)
        if array.ndim != 2 or array.shape[0] != 4:
            raise BadParameter("Split components must have shape (4, N+1)", context={'shape': array.shape})
        object.__setattr__(self, 'components', _readonly(array))

    @property
    def F1(self) -> np.ndarray:
        return self.components[0]

    @property
    def F2(self) -> np.ndarray:
        return self.components[1]

    @property
    def F3(self) -> np.ndarray:
        return self.components[2]

    @property
    def F4(self) -> np.ndarray:
        return self.components[3]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'frame': self.frame.to_dict(),
            'components': [[[float(c.real), float(c.imag)] for c in row] for row in self.components]
        }

