"""JSON serialisation with tagged numerics and run manifests.

Every number is written as ``{"kind": "exact-decimal", "value": "..."}`` for
integers and rationals (``"p/q"``) or ``{"kind": "float64", "value": x}``
for floats, so exact quantities never pass through a float.
"""

from __future__ import annotations

import datetime as _dt
import hashlib
import json
import math
from fractions import Fraction

from . import __version__

VOLATILE_KEYS = ("runtime_ms", "manifest", "payload_sha256")


def tag(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return {"kind": "exact-decimal", "value": str(obj)}
    if isinstance(obj, Fraction):
        text = str(obj.numerator) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
        return {"kind": "exact-decimal", "value": text}
    if isinstance(obj, float):
        return {"kind": "float64", "value": obj if math.isfinite(obj) else None}
    if isinstance(obj, dict):
        return {str(k): tag(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [tag(v) for v in obj]
    if hasattr(obj, "item"):  # numpy scalar
        return tag(obj.item())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj, indent=None) -> str:
    return json.dumps(tag(obj), sort_keys=True, indent=indent, separators=(",", ":") if indent is None else None,
                      ensure_ascii=False)


def payload(report: dict) -> dict:
    """The deterministic part of a report (timing and manifest stripped)."""
    return {k: v for k, v in report.items() if k not in VOLATILE_KEYS}


def payload_bytes(report: dict) -> bytes:
    return dumps(payload(report)).encode("utf-8")


def payload_sha256(report: dict) -> str:
    return hashlib.sha256(payload_bytes(report)).hexdigest()


def manifest(subcommand: str, config: dict, seed=None, outputs=()) -> dict:
    return {
        "subcommand": subcommand,
        "config": config,
        "seed": seed,
        "tool_version": __version__,
        "timestamp": _dt.datetime.now(_dt.timezone.utc).replace(microsecond=0).isoformat(),
        "outputs": list(outputs),
    }


def with_manifest(report: dict, man: dict) -> dict:
    out = dict(report)
    out["manifest"] = man
    out["payload_sha256"] = payload_sha256(report)
    return out
