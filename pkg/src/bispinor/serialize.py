"""JSON encoding with explicit ``{"re": ..., "im": ...}`` complex numbers."""
from __future__ import annotations

import json
from dataclasses import asdict, is_dataclass
from enum import Enum

import numpy as np


def to_jsonable(obj):
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": float(obj.real) + 0.0, "im": float(obj.imag) + 0.0}
    if isinstance(obj, np.ndarray):
        return [to_jsonable(x) for x in obj.tolist()]
    if isinstance(obj, (float, np.floating)):
        # + 0.0 folds -0.0 into 0.0 so reports do not flip on signed zeros
        return float(obj) + 0.0
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if is_dataclass(obj) and not isinstance(obj, type):
        return {k: to_jsonable(v) for k, v in asdict(obj).items()}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2)


def parse_complex(x) -> complex:
    if isinstance(x, dict):
        return complex(float(x["re"]), float(x.get("im", 0.0)))
    if isinstance(x, (list, tuple)) and len(x) == 2:
        return complex(float(x[0]), float(x[1]))
    return complex(float(x))


def parse_complex_array(data, shape) -> np.ndarray:
    arr = np.array([parse_complex(x) for x in np.array(data, dtype=object).reshape(-1)], dtype=complex)
    if arr.size != int(np.prod(shape)):
        raise ValueError(f"expected {int(np.prod(shape))} complex entries, got {arr.size}")
    return arr.reshape(shape)


def parse_reals(text: str, n: int) -> np.ndarray:
    """Comma-separated reals (CSV) or a JSON list."""
    text = text.strip()
    if text.startswith("["):
        vals = json.loads(text)
    else:
        vals = [v for v in text.split(",") if v.strip()]
    out = np.array([float(v) for v in vals])
    if out.size != n:
        raise ValueError(f"expected {n} values, got {out.size}")
    return out
