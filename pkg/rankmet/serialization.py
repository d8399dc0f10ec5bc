"""JSON files for fields, codes and systems, and the JSON form of reports."""

import dataclasses
import json
import logging
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any

import galois
import numpy as np
from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

from .code import RankCode
from .config import SCHEMA_VERSION
from .errors import ParseError, RankMetError
from .gf import FieldCtx, build_field, parse_element
from .geometry import QSystem
from .hamming import HammingCode
from .linalg import Subspace

logger = logging.getLogger(__name__)

ELEMENT_SCHEMA: dict[str, Any] = {
    "oneOf": [
        {"type": "integer", "minimum": 0},
        {"type": "string", "pattern": r"^(0|g\^-?\d+)$"},
    ]
}

FIELD_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        "p": {"type": "integer", "minimum": 2},
        "e": {"type": "integer", "minimum": 1},
        "m": {"type": "integer", "minimum": 1},
        "modulus": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2},
        "gamma": {"type": "array", "items": ELEMENT_SCHEMA, "minItems": 1},
    },
    "required": ["p", "m"],
    "additionalProperties": False,
}

_MATRIX_SCHEMA: dict[str, Any] = {
    "type": "array",
    "items": {"type": "array", "items": ELEMENT_SCHEMA},
}

CODE_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "metric": {"enum": ["rank", "hamming"]},
        "field": FIELD_SCHEMA,
        "n": {"type": "integer", "minimum": 1},
        "k": {"type": "integer", "minimum": 0},
        "generator": _MATRIX_SCHEMA,
    },
    "required": ["field", "n", "k", "generator"],
}

SYSTEM_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "field": FIELD_SCHEMA,
        "n": {"type": "integer", "minimum": 1},
        "k": {"type": "integer", "minimum": 1},
        "basis": _MATRIX_SCHEMA,
    },
    "required": ["field", "k", "basis"],
}


def validate(document: Any, schema: dict[str, Any]) -> None:
    """Raise ParseError naming the JSON path of the most relevant violation."""
    error = best_match(Draft202012Validator(schema).iter_errors(document))
    if error is not None:
        raise ParseError(f"{error.json_path}: {error.message}")


def load_document(path: Path | str) -> dict[str, Any]:
    path = Path(path)
    try:
        document = json.loads(path.read_text())
    except FileNotFoundError as exc:
        raise ParseError(f"No such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(document, dict):
        raise ParseError(f"{path}: expected a JSON object")
    logger.debug("loaded %s with keys %s", path, sorted(document))
    return document


def field_from_json(spec: dict[str, Any]) -> FieldCtx:
    validate(spec, FIELD_SCHEMA)
    e = spec.get("e", 1)
    modulus = spec.get("modulus")
    ctx = build_field(spec["p"], e, spec["m"], modulus)
    if "gamma" in spec:
        gamma = [parse_element(ctx, token) for token in spec["gamma"]]
        ctx = build_field(spec["p"], e, spec["m"], modulus, gamma)
    return ctx


def _matrix(ctx: FieldCtx, rows: list[list[Any]], shape: tuple[int, int], where: str) -> galois.FieldArray:
    if len(rows) != shape[0] or any(len(row) != shape[1] for row in rows):
        raise ParseError(f"$.{where}: expected a {shape[0]}×{shape[1]} matrix")
    values = [[_element(ctx, token, f"$.{where}[{i}][{j}]") for j, token in enumerate(row)] for i, row in enumerate(rows)]
    return ctx.GF(np.array(values, dtype=np.int64).reshape(shape))


def _element(ctx: FieldCtx, token: Any, where: str) -> int:
    try:
        return parse_element(ctx, token)
    except ParseError as exc:
        raise ParseError(f"{where}: {exc.message}") from exc


def code_from_json(document: dict[str, Any]) -> RankCode:
    validate(document, CODE_SCHEMA)
    if document.get("metric", "rank") != "rank":
        raise ParseError("$.metric: expected a rank-metric code file")
    ctx = field_from_json(document["field"])
    generator = _matrix(ctx, document["generator"], (document["k"], document["n"]), "generator")
    return RankCode(ctx, generator)


def hamming_from_json(document: dict[str, Any]) -> HammingCode:
    validate(document, CODE_SCHEMA)
    ctx = field_from_json(document["field"])
    generator = _matrix(ctx, document["generator"], (document["k"], document["n"]), "generator")
    return HammingCode(ctx, generator)


def system_from_json(document: dict[str, Any]) -> QSystem:
    validate(document, SYSTEM_SCHEMA)
    ctx = field_from_json(document["field"])
    rows = document["basis"]
    k = document["k"]
    basis = _matrix(ctx, rows, (len(rows), k), "basis")
    system = QSystem.from_vectors(ctx, k, basis)
    if "n" in document and system.n != document["n"]:
        raise ParseError(f"$.n: basis spans dimension {system.n}, file says {document['n']}")
    return system


def load_input(path: Path | str) -> RankCode | QSystem | HammingCode:
    """A code, system or Hamming code file, told apart by its keys."""
    document = load_document(path)
    if "basis" in document:
        return system_from_json(document)
    if document.get("metric") == "hamming":
        return hamming_from_json(document)
    return code_from_json(document)


def load_code(path: Path | str) -> RankCode:
    """A rank-metric code, reading a system file through psi."""
    loaded = load_input(path)
    if isinstance(loaded, QSystem):
        return RankCode(loaded.ctx, loaded.generator)
    if isinstance(loaded, HammingCode):
        raise ParseError(f"{path}: expected a rank-metric code, got a Hamming code")
    return loaded


def code_to_json(code: RankCode | HammingCode | QSystem) -> dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, **code.to_json()}


def to_jsonable(value: Any) -> Any:
    """Plain JSON values for reports: dataclasses, enums, field arrays and Fractions."""
    if isinstance(value, RankCode | HammingCode | QSystem | Subspace):
        return to_jsonable(value.to_json())
    if isinstance(value, FieldCtx):
        return value.to_json()
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: to_jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Fraction):
        return {"numerator": value.numerator, "denominator": value.denominator}
    if isinstance(value, np.ndarray):
        return value.view(np.ndarray).tolist()
    if isinstance(value, np.integer | np.bool_):
        return value.item()
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, list | tuple):
        return [to_jsonable(item) for item in value]
    if isinstance(value, RankMetError):
        return {"error": type(value).__name__, "message": value.message}
    return value


def dumps(document: Any) -> str:
    return json.dumps(to_jsonable(document), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def dump_json(document: Any, path: Path | None = None) -> str:
    """Serialize with sorted keys; write to `path` when given."""
    text = dumps(document)
    if path is not None:
        Path(path).write_text(text)
    return text
