"""Output records: JSON lines with 17-significant-digit floats, and plain text."""

from __future__ import annotations

import dataclasses
import enum
import json
import math
from fractions import Fraction

import mpmath

SCHEMA_VERSION = "1"


def plain(obj):
    """Convert library values into JSON-compatible Python values."""
    if isinstance(obj, enum.Enum):
        return obj.value
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: plain(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [plain(v) for v in obj]
    if isinstance(obj, (mpmath.mpf, Fraction)):
        return float(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str, float)):
        return obj
    return str(obj)


def _dump(v) -> str:
    if isinstance(v, float):
        if math.isfinite(v):
            text = format(v, ".17g")
            return text if any(ch in text for ch in ".en") else text + ".0"
        return "null"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {_dump(x)}" for k, x in v.items()) + "}"
    if isinstance(v, list):
        return "[" + ", ".join(_dump(x) for x in v) + "]"
    return json.dumps(v)


def make_record(command: str, args: dict, payload) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command,
            "args": plain(args), "payload": plain(payload)}


def dumps(record: dict) -> str:
    """One JSON line; floats carry 17 significant digits so they round-trip."""
    return _dump(plain(record))


def loads(line: str) -> dict:
    return json.loads(line)


def text_lines(payload, indent: str = "") -> list:
    out = []
    for k, v in plain(payload).items():
        if isinstance(v, dict):
            out.append(f"{indent}{k}:")
            out.extend(text_lines(v, indent + "  "))
        else:
            if isinstance(v, float):
                v = format(v, ".17g")
            out.append(f"{indent}{k}: {v}")
    return out
