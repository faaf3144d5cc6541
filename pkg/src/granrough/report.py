"""Canonical report emission."""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from typing import Any

from granrough import __version__


def _plain(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(_plain(v) for v in obj)
    if hasattr(obj, "to_json"):
        return _plain(obj.to_json())
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return _plain(dataclasses.asdict(obj))
    return obj


def emit_report(result: Any, command: str | None = None) -> str:
    """Stable JSON: sorted keys, fixed separators, a version field."""
    body = {"version": __version__, "result": _plain(result)}
    if command is not None:
        body["command"] = command
    return json.dumps(body, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit_text(result: Any, indent: int = 0) -> str:
    """A flat ``key: value`` rendering for terminals."""
    data = _plain(result)
    pad = "  " * indent
    if isinstance(data, dict):
        lines = []
        for k in sorted(data):
            v = data[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(emit_text(v, indent + 1).rstrip("\n"))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v, ensure_ascii=False)}")
        return "\n".join(lines) + "\n"
    if isinstance(data, list):
        if all(not isinstance(v, (dict, list)) for v in data):
            return f"{pad}{json.dumps(data, ensure_ascii=False)}\n"
        return "".join(f"{pad}-\n" + emit_text(v, indent + 1) for v in data)
    return f"{pad}{json.dumps(data, ensure_ascii=False)}\n"
