"""JSON loaders for spaces, rough Y-systems and correspondence maps."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any

import jsonschema

from granrough.core_space import ApproximationSpace, Relation, SpaceError, Universe
from granrough.correspondence import Correspondence, build_from_partial
from granrough.rys import Rys, build_classical_rys, build_tolerance_rys

_NAMES = {"type": "array", "items": {"type": "string", "minLength": 1}}
_PAIRS = {"type": "array", "items": {**_NAMES, "minItems": 2, "maxItems": 2}}

SPACE_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "universe": {**_NAMES, "minItems": 1},
        "relation": {
            "type": "object",
            "properties": {
                "kind": {"enum": ["equivalence", "tolerance", "general"]},
                "seeds": _PAIRS,
                "pairs": _PAIRS,
                "closure": {"type": "boolean"},
            },
            "required": ["kind"],
            "oneOf": [{"required": ["seeds"]}, {"required": ["pairs"]}],
            "additionalProperties": False,
        },
        "partition": {"type": "array", "items": {**_NAMES, "minItems": 1}},
        "approximation": {"enum": ["neighborhood", "block", "partition"]},
        "approx": {"enum": ["classical", "neighborhood", "block"]},
        "axioms": _NAMES,
    },
    "required": ["universe"],
    "oneOf": [{"required": ["relation"]}, {"required": ["partition"]}],
    "not": {"required": ["approx", "approximation"]},
    "additionalProperties": False,
}

MAP_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "extension": {"enum": ["explicit-total", "oplus-extension", "identity-elsewhere"]},
        "map": {
            "type": "array",
            "items": {"type": "array", "items": _NAMES, "minItems": 2, "maxItems": 2},
        },
    },
    "required": ["map", "extension"],
    "additionalProperties": False,
}


class InputError(ValueError):
    """Malformed or schema-violating input; the CLI maps it to exit code 2."""


def read_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: malformed JSON ({e.msg} at line {e.lineno})") from None


def _validate(doc: Any, schema: dict, what: str) -> None:
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as e:
        where = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise InputError(f"{what} schema violation at {where}: {e.message}") from None


def space_from_json(doc: Any) -> ApproximationSpace:
    _validate(doc, SPACE_SCHEMA, "space")
    try:
        if "partition" in doc:
            blocks = doc["partition"]
            if sorted(x for b in blocks for x in b) != sorted(doc["universe"]):
                raise InputError("partition blocks must cover the universe exactly once")
            seeds = [[b[0], x] for b in blocks for x in b[1:]]
            return ApproximationSpace.from_seeds(doc["universe"], seeds, "equivalence")
        rel = doc["relation"]
        if "seeds" in rel:
            return ApproximationSpace.from_seeds(doc["universe"], rel["seeds"], rel["kind"])
        if rel.get("closure", False):
            return ApproximationSpace.from_seeds(doc["universe"], rel["pairs"], rel["kind"])
        u = Universe(tuple(doc["universe"]))
        return ApproximationSpace(u, Relation(u, frozenset(map(tuple, rel["pairs"])), rel["kind"]))
    except SpaceError as e:
        raise InputError(str(e)) from None


_APPROX_ALIASES = {"classical": "partition", "neighborhood": "neighborhood", "block": "block"}


def rys_from_json(doc: Any) -> Rys:
    sp = space_from_json(doc)
    name = doc.get("name", "rys")
    style = doc.get("approximation", _APPROX_ALIASES.get(doc.get("approx")))
    try:
        if sp.kind == "equivalence" and style in (None, "partition"):
            rys = build_classical_rys(sp, name)
        elif sp.kind == "tolerance":
            rys = build_tolerance_rys(sp, style or "neighborhood", name)
        else:
            raise InputError(f"no rough Y-system for a {sp.kind} relation with {style!r} approximations")
        if "axioms" in doc:
            rys = rys.with_axioms(doc["axioms"])
    except ValueError as e:
        if isinstance(e, InputError):
            raise
        raise InputError(str(e)) from None
    return rys


def load_space(path: str | Path) -> ApproximationSpace:
    return space_from_json(read_json(path))


def load_rys(path: str | Path) -> Rys:
    return rys_from_json(read_json(path))


def _mask(rys: Rys, names: list[str], path: str) -> int:
    try:
        return rys.universe.mask_of(names)
    except (KeyError, SpaceError, ValueError):
        raise InputError(f"{path}: unknown element among {names}") from None


def map_from_json(doc: Any, source: Rys, target: Rys, where: str = "map") -> Correspondence:
    _validate(doc, MAP_SCHEMA, "map")
    partial: dict[int, int] = {}
    for src, tgt in doc["map"]:
        a = _mask(source, src, where)
        if a in partial:
            raise InputError(f"{where}: {src} is mapped twice")
        partial[a] = _mask(target, tgt, where)
    try:
        return build_from_partial(source, target, partial, doc["extension"], doc.get("name", "phi"))
    except ValueError as e:
        raise InputError(f"{where}: {e}") from None


def load_map(path: str | Path, source: Rys, target: Rys) -> Correspondence:
    return map_from_json(read_json(path), source, target, str(path))


def map_to_json(phi: Correspondence) -> dict[str, Any]:
    return {
        "name": phi.name,
        "extension": "explicit-total",
        "map": [[phi.source.names(a), phi.target.names(v)] for a, v in phi.items()],
    }


def data_path(name: str) -> Path:
    """Path of a bundled example file."""
    return Path(str(resources.files("granrough") / "data" / name))
