"""Problem configuration: JSON schema, validation and construction of model objects."""

import json
from dataclasses import dataclass

import jsonschema
import numpy as np

from .algebra import N_MAX
from .determinant import DEFAULT_TOL
from .errors import InvalidConfig
from .model import DEFAULT_ZERO_TOL, BoundarySpec, DiracSystem
from .polyfunc import PolyFunc
from .spectrum import Rect

_COMPLEX = {
    "oneOf": [
        {"type": "number"},
        {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2},
    ]
}

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["b1", "b2", "q12_coeffs", "q21_coeffs", "boundary_rows"],
    "additionalProperties": False,
    "properties": {
        "b1": {"type": "number"},
        "b2": {"type": "number"},
        "q12_coeffs": {"type": "array", "items": _COMPLEX},
        "q21_coeffs": {"type": "array", "items": _COMPLEX},
        "boundary_rows": {
            "type": "array",
            "minItems": 2,
            "maxItems": 2,
            "items": {"type": "array", "minItems": 4, "maxItems": 4, "items": _COMPLEX},
        },
        "order_n": {"type": "integer", "minimum": 0},
        "tolerances": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "zero_tol": {"type": "number", "exclusiveMinimum": 0},
                "ode_tol": {"type": "number", "exclusiveMinimum": 0},
            },
        },
        "scan": {
            "type": "object",
            "additionalProperties": False,
            "required": ["t_min", "t_max", "points"],
            "properties": {
                "t_min": {"type": "number", "exclusiveMinimum": 0},
                "t_max": {"type": "number"},
                "points": {"type": "integer", "minimum": 2},
                "halfplane": {"enum": ["upper", "lower"]},
            },
        },
        "rect": {
            "type": "object",
            "additionalProperties": False,
            "required": ["re_min", "re_max", "im_min", "im_max"],
            "properties": {k: {"type": "number"} for k in ("re_min", "re_max", "im_min", "im_max")},
        },
    },
}


@dataclass(frozen=True)
class ScanSpec:
    t_min: float
    t_max: float
    points: int
    halfplane: str = "upper"

    def grid(self):
        return np.geomspace(self.t_min, self.t_max, self.points)


@dataclass(frozen=True)
class ProblemConfig:
    system: DiracSystem
    bc: BoundarySpec
    order_n: int
    zero_tol: float
    ode_tol: float
    scan: object  # ScanSpec or None
    rect: object  # Rect or None


def _complex(v):
    return complex(v) if not isinstance(v, list) else complex(v[0], v[1])


def parse_config(doc):
    """Validate a decoded JSON document and build a ProblemConfig."""
    try:
        jsonschema.validate(doc, SCHEMA)
    except jsonschema.ValidationError as exc:
        raise InvalidConfig(f"schema violation at {list(exc.absolute_path)}: {exc.message}") from None
    try:
        system = DiracSystem(
            float(doc["b1"]),
            float(doc["b2"]),
            PolyFunc([_complex(c) for c in doc["q12_coeffs"]]),
            PolyFunc([_complex(c) for c in doc["q21_coeffs"]]),
        )
        bc = BoundarySpec(np.array([[_complex(v) for v in row] for row in doc["boundary_rows"]]))
    except (ValueError, TypeError) as exc:
        raise InvalidConfig(str(exc)) from None

    order_n = int(doc.get("order_n", 3))
    if order_n > N_MAX:
        raise InvalidConfig(f"order_n={order_n} exceeds {N_MAX}")
    tols = doc.get("tolerances", {})
    zero_tol = float(tols.get("zero_tol", DEFAULT_ZERO_TOL))
    ode_tol = float(tols.get("ode_tol", DEFAULT_TOL))
    if not (1e-13 <= ode_tol <= 1e-6):
        raise InvalidConfig(f"ode_tol must lie in [1e-13, 1e-6], got {ode_tol}")
    if zero_tol >= 1:
        raise InvalidConfig(f"zero_tol must be below 1, got {zero_tol}")

    scan = None
    if "scan" in doc:
        s = doc["scan"]
        if not s["t_max"] > s["t_min"]:
            raise InvalidConfig("scan.t_max must exceed scan.t_min")
        scan = ScanSpec(float(s["t_min"]), float(s["t_max"]), int(s["points"]), s.get("halfplane", "upper"))
    rect = None
    if "rect" in doc:
        r = doc["rect"]
        try:
            rect = Rect(float(r["re_min"]), float(r["re_max"]), float(r["im_min"]), float(r["im_max"]))
        except ValueError as exc:
            raise InvalidConfig(str(exc)) from None
    return ProblemConfig(system, bc, order_n, zero_tol, ode_tol, scan, rect)


def load_config(path):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InvalidConfig(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InvalidConfig(f"{path} is not valid JSON: {exc}") from None
    return parse_config(doc)
