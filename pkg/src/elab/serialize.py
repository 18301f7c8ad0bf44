"""Deterministic serialization: 17-significant-digit numbers, CSV/JSON duals.

17 significant decimal digits round-trip binary64 exactly, so parsing either
output format reproduces the in-memory floats bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import asdict, is_dataclass
from typing import Any


def fmt_float(x: float) -> str:
    if isinstance(x, float) and not math.isfinite(x):
        raise ValueError(f"refusing to serialize non-finite value {x!r}")
    return format(float(x), ".17g")


def _json_fragment(obj: Any, parts: list[str]) -> None:
    if obj is None:
        parts.append("null")
    elif obj is True:
        parts.append("true")
    elif obj is False:
        parts.append("false")
    elif isinstance(obj, int):
        parts.append(str(obj))
    elif isinstance(obj, float):
        parts.append(fmt_float(obj))
    elif isinstance(obj, str):
        import json as _json

        parts.append(_json.dumps(obj))
    elif is_dataclass(obj) and not isinstance(obj, type):
        _json_fragment(asdict(obj), parts)
    elif isinstance(obj, dict):
        parts.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                parts.append(",")
            _json_fragment(str(k), parts)
            parts.append(":")
            _json_fragment(v, parts)
        parts.append("}")
    elif isinstance(obj, (list, tuple)):
        parts.append("[")
        for i, v in enumerate(obj):
            if i:
                parts.append(",")
            _json_fragment(v, parts)
        parts.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_json(obj: Any) -> str:
    """Compact JSON with floats at 17 significant digits."""
    parts: list[str] = []
    _json_fragment(obj, parts)
    return "".join(parts)


def _param_repr(n) -> Any:
    """Integral parameters print as integers, fractional ones (h grids) as floats."""
    if isinstance(n, int):
        return n
    if float(n).is_integer() and abs(n) < 2 ** 53:
        return int(n)
    return float(n)


def records_to_csv(rows: list) -> str:
    """CSV with the canonical ``n,value,error,bound`` header."""
    lines = ["n,value,error,bound"]
    for r in rows:
        bound = "" if r.bound is None else fmt_float(r.bound)
        n = _param_repr(r.n)
        n_repr = str(n) if isinstance(n, int) else fmt_float(n)
        lines.append(f"{n_repr},{fmt_float(r.value)},{fmt_float(r.error)},{bound}")
    return "\n".join(lines) + "\n"


def records_to_json(rows: list) -> str:
    return to_json(
        [{"n": _param_repr(r.n), "value": r.value, "error": r.error, "bound": r.bound} for r in rows]
    )
