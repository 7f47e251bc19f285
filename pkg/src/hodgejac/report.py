"""Canonical machine-readable reports.

A report is a tree of dicts, lists, strings, integers and booleans.  Its
canonical form is compact JSON with sorted keys; the SHA-256 of that form,
taken with the volatile fields removed, is embedded as ``digest``.  Two runs
with identical inputs therefore produce identical digests and, apart from
those fields, identical files.
"""
from __future__ import annotations

import enum
import hashlib
import json
from fractions import Fraction
from pathlib import Path

#: keys whose values depend on the machine or the run, not on the inputs
VOLATILE_KEYS = ("timing", "backend")


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, enum.Enum):
        return _plain(obj.value)
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else int(obj)
    if hasattr(obj, "item") and not isinstance(obj, (str, bytes)):  # numpy scalars
        return obj.item()
    return obj


def canonical_json(obj) -> str:
    return json.dumps(_plain(obj), sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def digest(report: dict) -> str:
    stable = {k: v for k, v in report.items() if k not in VOLATILE_KEYS and k != "digest"}
    return hashlib.sha256(canonical_json(stable).encode()).hexdigest()


def finalize(report: dict) -> dict:
    out = _plain(report)
    out["digest"] = digest(out)
    return out


def dumps(report: dict) -> str:
    """Human-friendly but still canonical rendering (sorted keys, fixed indent)."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def write(report: dict, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(report))
    return path


def load(path: str | Path) -> dict:
    return json.loads(Path(path).read_text())
