"""
Input loading utilities for JSON payloads.
"""
import json
from pathlib import Path
from typing import Any, Optional

from src.config import Config
from src.errors import ParseError


def load_input(source: str, data_dir: Optional[str] = None) -> Any:
    """
    Load a JSON payload from a path, a file under the data directory, or inline text.

    Args:
        source: File path, file name relative to ``data_dir``, or a JSON string
        data_dir: Directory searched for bare file names

    Returns:
        The decoded JSON value
    """
    text = source
    for candidate in (Path(source), Path(data_dir or Config.DATA_DIR) / source):
        try:
            if candidate.is_file():
                text = candidate.read_text(encoding="utf-8")
                break
        except OSError:
            # Inline JSON can be too long to be a valid file name
            continue
    return parse_json(text)


def parse_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError("", f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}")
