"""Reading and writing manifold, bundle and cover files (JSON)."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import jsonschema

from .algebra import LaurentPoly
from .bundle import Bundle4, CoverDatum, Manifold3
from .errors import InputError, SchemaError
from .norms import alexander_dual_ball, dual_ball_from_vertices
from .swtheory import SWSupport

_INT_VEC = {"type": "array", "items": {"type": "integer"}}

MANIFOLD_SCHEMA = {
    "type": "object",
    "required": ["name", "b1"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string"},
        "b1": {"type": "integer", "minimum": 1},
        "alexander": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["exp", "coeff"],
                "additionalProperties": False,
                "properties": {"exp": _INT_VEC, "coeff": {"type": "integer"}},
            },
        },
        "dual_ball_vertices": {"type": "array", "minItems": 1, "items": _INT_VEC},
        "sw_support": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["c1", "value"],
                "additionalProperties": False,
                "properties": {"c1": _INT_VEC, "value": {"type": "integer"}},
            },
        },
        "fibered_marks": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    },
    "anyOf": [{"required": ["alexander"]}, {"required": ["dual_ball_vertices"]}],
}

BUNDLE_SCHEMA = {
    "type": "object",
    "required": ["manifold"],
    "additionalProperties": False,
    "properties": {
        "manifold": {"type": ["object", "string"]},
        "euler": _INT_VEC,
        "euler_torsion": {"type": "boolean"},
    },
}

COVER_SCHEMA = {
    "type": "object",
    "required": ["base", "deg_N", "q", "pullback", "pushforward"],
    "additionalProperties": False,
    "properties": {
        "base": {"type": ["object", "string"]},
        "cover": {"type": ["object", "string"]},
        "deg_N": {"type": "integer", "minimum": 1},
        "q": {"type": "integer", "minimum": 1},
        "pullback": {"type": "array", "items": _INT_VEC},
        "pushforward": {"type": "array", "items": _INT_VEC},
        "classes": {"type": "array", "items": _INT_VEC},
        "euler": _INT_VEC,
    },
}


def _load_json(text: str, source: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{source}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _validate(doc: Any, schema: dict, source: str) -> None:
    validator = jsonschema.Draft7Validator(schema)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
    if errors:
        err = errors[0]
        where = "/".join(str(p) for p in err.path) or "<root>"
        raise SchemaError(f"{source}: field {where}: {err.message}")


def _check_len(vec: list, b1: int, field: str) -> None:
    if len(vec) != b1:
        raise InputError(f"field {field}: length {len(vec)} does not match b1 = {b1}")


def manifold_from_dict(doc: Any, source: str = "<manifold>") -> Manifold3:
    _validate(doc, MANIFOLD_SCHEMA, source)
    b1 = doc["b1"]
    delta = None
    if "alexander" in doc:
        for i, t in enumerate(doc["alexander"]):
            _check_len(t["exp"], b1, f"alexander/{i}/exp")
        delta = LaurentPoly(b1, [(t["exp"], t["coeff"]) for t in doc["alexander"]])
    listed = None
    if "dual_ball_vertices" in doc:
        listed = [tuple(v) for v in doc["dual_ball_vertices"]]
        for i, v in enumerate(listed):
            _check_len(list(v), b1, f"dual_ball_vertices/{i}")
        ball = dual_ball_from_vertices(listed)
        source_tag = "input"
    else:
        ball = alexander_dual_ball(delta)
        source_tag = "alexander-convention"
        listed = list(ball.vertices)
    sw = None
    if "sw_support" in doc:
        for i, s in enumerate(doc["sw_support"]):
            _check_len(s["c1"], b1, f"sw_support/{i}/c1")
        sw = SWSupport(b1, [(s["c1"], s["value"]) for s in doc["sw_support"]])
    marks = None
    if "fibered_marks" in doc:
        marks = []
        for i in doc["fibered_marks"]:
            if i >= len(listed):
                raise InputError(f"field fibered_marks: index {i} out of range")
            marks.append(tuple(listed[i]))
        marks = tuple(sorted(set(marks)))
    return Manifold3(doc["name"], b1, ball, delta, sw, marks, source_tag)


def parse_manifold(text: str, source: str = "<manifold>") -> Manifold3:
    return manifold_from_dict(_load_json(text, source), source)


def manifold_to_dict(m: Manifold3) -> dict:
    doc: dict[str, Any] = {"name": m.name, "b1": m.b1}
    if m.delta is not None:
        doc["alexander"] = [{"exp": list(e), "coeff": c} for e, c in m.delta.terms]
    verts = list(m.dual_ball.vertices)
    if m.ball_source == "input":
        doc["dual_ball_vertices"] = [list(v) for v in verts]
    if m.sw is not None:
        doc["sw_support"] = [{"c1": list(k), "value": v} for k, v in m.sw.entries]
    if m.fibered_marks is not None:
        doc["fibered_marks"] = sorted(verts.index(tuple(v)) for v in m.fibered_marks)
    return doc


def dumps(doc: Any) -> str:
    """Canonical JSON: sorted keys, no floats."""
    return json.dumps(doc, sort_keys=True, ensure_ascii=False)


def serialize_manifold(m: Manifold3) -> str:
    return dumps(manifold_to_dict(m))


def _resolve(ref: Any, base_dir: Path, source: str) -> Manifold3:
    if isinstance(ref, str):
        path = (base_dir / ref).resolve()
        return load_manifold(path)
    return manifold_from_dict(ref, source)


def load_manifold(path: str | Path) -> Manifold3:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_manifold(text, str(path))


def load_input(path: str | Path) -> tuple[Manifold3, dict]:
    """Load a manifold file or a bundle file.

    Returns the manifold and any bundle fields found (``euler``,
    ``euler_torsion``).
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    doc = _load_json(text, str(path))
    if isinstance(doc, dict) and "manifold" in doc:
        _validate(doc, BUNDLE_SCHEMA, str(path))
        m = _resolve(doc["manifold"], path.parent, f"{path}:manifold")
        extra = {k: doc[k] for k in ("euler", "euler_torsion") if k in doc}
        return m, extra
    return manifold_from_dict(doc, str(path)), {}


def bundle_from_dict(doc: Any, base_dir: Path = Path("."), source: str = "<bundle>") -> Bundle4:
    _validate(doc, BUNDLE_SCHEMA, source)
    m = _resolve(doc["manifold"], base_dir, f"{source}:manifold")
    torsion = doc.get("euler_torsion", False)
    euler = doc.get("euler", [0] * m.b1)
    _check_len(euler, m.b1, "euler")
    return Bundle4(m, tuple(euler), torsion)


def load_cover(path: str | Path) -> tuple[CoverDatum, Manifold3, dict]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    doc = _load_json(text, str(path))
    _validate(doc, COVER_SCHEMA, str(path))
    base = _resolve(doc["base"], path.parent, f"{path}:base")
    cover = _resolve(doc["cover"], path.parent, f"{path}:cover") if "cover" in doc else None
    cd = CoverDatum(doc["deg_N"], doc["q"], doc["pullback"], doc["pushforward"], cover)
    extra = {k: doc[k] for k in ("classes", "euler") if k in doc}
    return cd, base, extra
