"""JSON encoding helpers for complex scalars and arrays"""

from typing import Any, List, Sequence

import numpy as np

from tph_invert.errors import InvalidSymbolSpec


def complex_to_json(value: complex) -> List[float]:
    """Encode a complex number as [re, im]"""
    value = complex(value)
    return [float(value.real), float(value.imag)]


def complex_from_json(data: Any) -> complex:
    """
    Decode a complex number.

    Accepts a plain number, a [re, im] pair, a {"re": .., "im": ..} object or a
    Python complex literal string such as "1-2j".
    """
    if isinstance(data, bool):
        raise InvalidSymbolSpec(f"Not a complex number: {data!r}")
    if isinstance(data, (int, float, complex)):
        return complex(data)
    if isinstance(data, (list, tuple)) and len(data) == 2:
        return complex(float(data[0]), float(data[1]))
    if isinstance(data, dict) and "re" in data:
        return complex(float(data["re"]), float(data.get("im", 0.0)))
    if isinstance(data, str):
        try:
            return complex(data.replace(" ", ""))
        except ValueError as exc:
            raise InvalidSymbolSpec(f"Not a complex number: {data!r}") from exc
    raise InvalidSymbolSpec(f"Not a complex number: {data!r}")


def array_to_json(values: Sequence[complex]) -> List[List[float]]:
    """Encode a complex vector as a list of [re, im] pairs"""
    return [complex_to_json(v) for v in np.asarray(values, dtype=complex)]


def array_from_json(data: Sequence[Any]) -> np.ndarray:
    """Decode a list produced by array_to_json"""
    return np.array([complex_from_json(v) for v in data], dtype=complex)
