"""
Octonion value types: Octonion, UnitImaginary and Frame
"""

import numbers
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Union

import numpy as np

from models.multiplication_table import DIMENSION, table_product, conjugate_components
from utils.constants import UNIT_TOL
from utils.exceptions import BadFrame, BadParameter

Scalar = Union[int, float, np.floating]


class Octonion:
    """Immutable octonion stored as 8 real components in the basis [1, e1, ..., e7]"""

    __slots__ = ("_x",)

    def __init__(self, components: Union[Scalar, Iterable[float], np.ndarray] = 0.0):
        if isinstance(components, numbers.Real):
            array = np.zeros(DIMENSION, dtype=np.float64)
            array[0] = float(components)
        else:
            array = np.array(components, dtype=np.float64).reshape(-1)
        if array.shape != (DIMENSION,):
            raise BadParameter("Octonion needs exactly 8 components", context={'shape': array.shape})
        if not np.all(np.isfinite(array)):
            raise BadParameter("Octonion components must be finite", context={'components': array.tolist()})
        array.setflags(write=False)
        self._x = array

    # Construction helpers

    @classmethod
    def basis(cls, index: int) -> "Octonion":
        """Return the basis element e_index (e_0 = 1)."""
        if not 0 <= index < DIMENSION:
            raise BadParameter("Basis index out of range", context={'index': index})
        array = np.zeros(DIMENSION)
        array[index] = 1.0
        return cls(array)

    @classmethod
    def real(cls, value: Scalar) -> "Octonion":
        """Embed a real number."""
        return cls(float(value))

    @classmethod
    def from_slice(cls, z: complex, unit: "Octonion") -> "Octonion":
        """Return Re(z) + Im(z) * unit for a point of the plane C_unit."""
        return cls(z.real * np.eye(DIMENSION)[0] + z.imag * unit.components)

    # Accessors

    @property
    def components(self) -> np.ndarray:
        """Read-only component array"""
        return self._x

    @property
    def re(self) -> float:
        """Real part"""
        return float(self._x[0])

    @property
    def im(self) -> "Octonion":
        """Imaginary part"""
        array = self._x.copy()
        array[0] = 0.0
        return Octonion(array)

    def conj(self) -> "Octonion":
        """Octonion conjugate"""
        return Octonion(conjugate_components(self._x))

    def norm_squared(self) -> float:
        """Squared modulus"""
        return float(np.dot(self._x, self._x))

    def norm(self) -> float:
        """Modulus"""
        return float(np.linalg.norm(self._x))

    def is_real(self, tol: float = UNIT_TOL) -> bool:
        return float(np.linalg.norm(self._x[1:])) <= tol

    def is_quaternionic(self, tol: float = UNIT_TOL) -> bool:
        """True when components 4..7 vanish"""
        return float(np.max(np.abs(self._x[4:]))) <= tol

    def isclose(self, other: Union["Octonion", Scalar], tol: float = UNIT_TOL) -> bool:
        other = _coerce(other)
        return float(np.max(np.abs(self._x - other._x))) <= tol

    def to_list(self) -> List[float]:
        """JSON array form"""
        return [float(v) for v in self._x]

    # Arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Octonion(self._x + other._x)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Octonion(self._x - other._x)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Octonion(other._x - self._x)

    def __neg__(self):
        return Octonion(-self._x)

    def __mul__(self, other):
        if isinstance(other, numbers.Real):
            return Octonion(self._x * float(other))
        if isinstance(other, Octonion):
            return Octonion(table_product(self._x, other._x))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return Octonion(self._x * float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Real):
            return Octonion(self._x / float(other))
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return bool(np.array_equal(self._x, other._x))

    def __hash__(self) -> int:
        return hash(tuple(self._x.tolist()))

    def __getitem__(self, index: int) -> float:
        return float(self._x[index])

    def __repr__(self) -> str:
        terms = ", ".join(f"{v:.6g}" for v in self._x)
        return f"Octonion([{terms}])"


def _coerce(value: Any):
    if isinstance(value, Octonion):
        return value
    if isinstance(value, numbers.Real):
        return Octonion(float(value))
    return None


ONE = Octonion.basis(0)
ZERO = Octonion(0.0)


@dataclass(frozen=True)
class UnitImaginary:
    """Purely imaginary unit octonion, i.e. an element of the 6-sphere of square roots of -1"""
    value: Octonion

    def __post_init__(self):
        if abs(self.value.re) > UNIT_TOL or abs(self.value.norm() - 1.0) > UNIT_TOL:
            raise BadParameter(
                "Imaginary unit must have zero real part and unit modulus",
                context={'re': self.value.re, 'norm': self.value.norm()}
            )

    @classmethod
    def basis(cls, index: int) -> "UnitImaginary":
        if not 1 <= index < DIMENSION:
            raise BadParameter("Imaginary basis index must be in 1..7", context={'index': index})
        return cls(Octonion.basis(index))

    @classmethod
    def from_components(cls, values: Iterable[float]) -> "UnitImaginary":
        """Normalize an imaginary vector into a unit (real part discarded)."""
        array = np.array(values, dtype=np.float64).reshape(-1)
        if array.shape != (DIMENSION,):
            raise BadParameter("Imaginary unit needs 8 components", context={'shape': array.shape})
        array[0] = 0.0
        norm = float(np.linalg.norm(array))
        if norm < UNIT_TOL:
            raise BadParameter("Cannot normalize a zero imaginary part")
        return cls(Octonion(array / norm))

    @property
    def components(self) -> np.ndarray:
        return self.value.components

    def __neg__(self) -> "UnitImaginary":
        return UnitImaginary(-self.value)

    def to_list(self) -> List[float]:
        return self.value.to_list()


@dataclass(frozen=True)
class Frame:
    """Imaginary units I, J, K with I, J, IJ, K mutually perpendicular"""
    I: UnitImaginary
    J: UnitImaginary
    K: UnitImaginary

    def __post_init__(self):
        ij = self.I.value * self.J.value
        vectors = {
            'I': self.I.components,
            'J': self.J.components,
            'IJ': ij.components,
            'K': self.K.components,
        }
        names = list(vectors)
        for a in range(len(names)):
            for b in range(a + 1, len(names)):
                product = float(np.dot(vectors[names[a]], vectors[names[b]]))
                if abs(product) > UNIT_TOL:
                    raise BadFrame(
                        f"<{names[a]}, {names[b]}> is not zero",
                        context={'inner': product}
                    )

    def basis(self) -> List[Octonion]:
        """Orthonormal basis [1, I, J, IJ, K, IK, JK, (IJ)K]"""
        i, j, k = self.I.value, self.J.value, self.K.value
        ij = i * j
        return [ONE, i, j, ij, k, i * k, j * k, ij * k]

    def to_dict(self) -> Dict[str, List[float]]:
        return {'I': self.I.to_list(), 'J': self.J.to_list(), 'K': self.K.to_list()}

    @classmethod
    def from_dict(cls, data: Dict[str, List[float]]) -> "Frame":
        return cls(
            I=UnitImaginary(Octonion(data['I'])),
            J=UnitImaginary(Octonion(data['J'])),
            K=UnitImaginary(Octonion(data['K']))
        )
