"""JSON files for superalgebras.

Format::

    {"n": 3, "m": 2, "conductor": 1,
     "brackets": [{"left": "x1", "right": "y1",
                   "value": [{"basis": "y2", "coeff": "1/2"}]}]}

Unlisted products are zero.  An optional ``metadata`` object is carried
through unchanged.
"""

from __future__ import annotations

import json
from pathlib import Path

import jsonschema

from .core import DimensionError, GradingError, SuperAlgebra
from .scalars import ScalarParseError, normalize_conductor, parse_scalar

BASIS_PATTERN = r"^[xy][1-9][0-9]*$"

ALGEBRA_SCHEMA = {
    "type": "object",
    "required": ["n", "m", "brackets"],
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "m": {"type": "integer", "minimum": 0},
        "conductor": {"type": "integer", "minimum": 1},
        "brackets": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["left", "right", "value"],
                "additionalProperties": False,
                "properties": {
                    "left": {"type": "string", "pattern": BASIS_PATTERN},
                    "right": {"type": "string", "pattern": BASIS_PATTERN},
                    "value": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["basis", "coeff"],
                            "additionalProperties": False,
                            "properties": {
                                "basis": {"type": "string", "pattern": BASIS_PATTERN},
                                "coeff": {"type": ["string", "integer"]},
                            },
                        },
                    },
                },
            },
        },
        "metadata": {"type": "object"},
    },
}


class InputError(ValueError):
    """Anything wrong with a user-supplied file or flag (CLI exit code 2)."""


def algebra_from_json(data) -> SuperAlgebra:
    try:
        jsonschema.validate(data, ALGEBRA_SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise InputError(f"schema violation at {where}: {exc.message}") from None
    n, m = data["n"], data["m"]
    conductor = normalize_conductor(data.get("conductor", 1))
    products: dict[tuple[str, str], dict[str, object]] = {}
    for entry in data["brackets"]:
        key = (entry["left"], entry["right"])
        if key in products:
            raise InputError(f"product [{key[0]}, {key[1]}] is listed twice")
        row: dict[str, object] = {}
        for term in entry["value"]:
            try:
                c = parse_scalar(str(term["coeff"]), conductor)
            except ScalarParseError as exc:
                raise InputError(f"[{key[0]}, {key[1]}]: {exc}") from None
            b = term["basis"]
            row[b] = row[b] + c if b in row else c
        products[key] = row
    try:
        return SuperAlgebra.from_names(n, m, products, conductor, data.get("metadata"))
    except (GradingError, DimensionError, ValueError) as exc:
        # parse_basis_name reports out-of-range names as ValueError
        raise InputError(str(exc)) from None


def algebra_to_json(A: SuperAlgebra, *, metadata: bool = True) -> dict:
    brackets = []
    for i, j, row in A.entries():
        brackets.append(
            {
                "left": A.name(i),
                "right": A.name(j),
                "value": [{"basis": A.name(k), "coeff": str(c)} for k, c in sorted(row.items())],
            }
        )
    out = {"n": A.n, "m": A.m, "conductor": A.conductor, "brackets": brackets}
    if metadata and A.metadata:
        out["metadata"] = _jsonable(A.metadata)
    return out


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


def load_algebra(path) -> SuperAlgebra:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from None
    return algebra_from_json(data)


def dumps(data) -> str:
    """Deterministic JSON text used for every report."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def save_algebra(A: SuperAlgebra, path) -> None:
    Path(path).write_text(dumps(algebra_to_json(A)))
