"""Canonical JSON output: sorted keys, floats with 17 significant digits, complex as [re, im]."""

import json
import math
from enum import Enum

import numpy as np


def _float(x):
    x = float(x)
    if not math.isfinite(x):
        return "null"
    if x == 0:
        return "0"  # folds -0.0 so mirrored computations print identically
    return "%.17g" % x


def _encode(obj, out):
    if obj is None:
        out.append("null")
    elif isinstance(obj, (bool, np.bool_)):
        out.append("true" if obj else "false")
    elif isinstance(obj, Enum):
        _encode(obj.value, out)
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(_float(obj))
    elif isinstance(obj, (complex, np.complexfloating)):
        out.append(f"[{_float(obj.real)},{_float(obj.imag)}]")
    elif isinstance(obj, str):
        out.append(json.dumps(obj, ensure_ascii=True))
    elif isinstance(obj, dict):
        out.append("{")
        for i, key in enumerate(sorted(obj, key=str)):
            if i:
                out.append(",")
            out.append(json.dumps(str(key), ensure_ascii=True))
            out.append(":")
            _encode(obj[key], out)
        out.append("}")
    elif isinstance(obj, (list, tuple, np.ndarray)):
        out.append("[")
        for i, item in enumerate(obj):
            if i:
                out.append(",")
            _encode(item, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj):
    """Deterministic JSON text for ``obj`` (no trailing newline)."""
    out = []
    _encode(obj, out)
    return "".join(out)
