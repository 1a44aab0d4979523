"""
JSON input/output utilities
Handles function files, point parsing and canonical report serialization
"""

import hashlib
import json
import math
from pathlib import Path
from typing import Any, Dict, Union

import numpy as np

from models.octonion import Octonion
from models.series_models import SliceSeries, RegularRational, SliceFunction
from utils.exceptions import ParseError, SliceCalcError


class FunctionFileIO:
    """Utility class for reading and writing series and rational JSON files"""

    @staticmethod
    def load_json(path: Union[str, Path]) -> Dict[str, Any]:
        """Read a JSON object from disk"""
        try:
            with open(path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except OSError as e:
            raise ParseError(f"Cannot read {path}: {e.strerror}", context={'path': str(path)})
        except json.JSONDecodeError as e:
            raise ParseError(f"Malformed JSON in {path}: {e.msg}", context={'line': e.lineno})
        if not isinstance(data, dict):
            raise ParseError("Top-level JSON value must be an object", context={'path': str(path)})
        return data

    @staticmethod
    def function_from_dict(data: Dict[str, Any]) -> SliceFunction:
        """Build a SliceSeries or RegularRational from its JSON form"""
        try:
            if 'num' in data and 'den' in data:
                return RegularRational.from_dict(data)
            if 'coeffs' in data:
                return SliceSeries.from_dict(data)
        except (SliceCalcError, KeyError, TypeError, ValueError) as e:
            raise ParseError(f"Invalid function description: {e}")
        raise ParseError("Expected a series ('coeffs') or a rational ('num', 'den')", context={'keys': sorted(data)})

    @staticmethod
    def load_function(path: Union[str, Path]) -> SliceFunction:
        return FunctionFileIO.function_from_dict(FunctionFileIO.load_json(path))

    @staticmethod
    def save_function(function: SliceFunction, path: Union[str, Path]) -> Path:
        """Write a function as JSON and return the path"""
        output = Path(path)
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(canonical_dumps(function.to_dict()) + "\n", encoding='utf-8')
        return output


def parse_point(text: str) -> Octonion:
    """
    Parse an octonion given as a JSON array or comma separated list of 8 reals.

    Raises:
        ParseError: If the text is not 8 finite numbers
    """
    stripped = text.strip()
    try:
        if stripped.startswith('['):
            values = json.loads(stripped)
        else:
            values = [float(part) for part in stripped.split(',') if part.strip()]
        return Octonion([float(v) for v in values])
    except (ValueError, TypeError, json.JSONDecodeError, SliceCalcError) as e:
        raise ParseError(f"Point must be 8 reals: {e}", context={'point': text})


def to_jsonable(value: Any) -> Any:
    """Convert numpy values, octonions, complex numbers and records to plain JSON types."""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, Octonion):
        return value.to_list()
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return [to_jsonable(value.real), to_jsonable(value.imag)]
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    if hasattr(value, 'to_dict'):
        return to_jsonable(value.to_dict())
    return value


def canonical_dumps(payload: Any) -> str:
    """Deterministic JSON text: sorted keys, fixed separators, shortest float repr"""
    return json.dumps(to_jsonable(payload), sort_keys=True, indent=2, ensure_ascii=True, allow_nan=False)


def payload_digest(payload: Any) -> str:
    """sha256 of the canonical JSON text"""
    return hashlib.sha256(canonical_dumps(payload).encode('utf-8')).hexdigest()
