"""
JSON emission with the versioned envelope.
"""
import json
from typing import Any, Dict

from src.config import Config
from src.errors import TrispinError


def envelope(payload: Dict[str, Any]) -> Dict[str, Any]:
    data = {"schema": Config.SCHEMA_VERSION}
    data.update(payload)
    return data


def dumps(payload: Dict[str, Any]) -> str:
    """Sorted keys and fixed separators, so exact-mode output is byte-stable."""
    return json.dumps(envelope(payload), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def error_payload(error: TrispinError) -> Dict[str, Any]:
    info = error.to_dict()
    info.setdefault("location", "")
    return {"error": info}
