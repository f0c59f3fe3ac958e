"""Shared helpers for the JSON text formats."""

import json
from typing import Any

from pydantic import ValidationError

from rainbowforge.errors import FormatError


def load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e.msg}", f"line {e.lineno}, column {e.colno}") from e


def format_error(e: ValidationError) -> FormatError:
    """First validation error as a FormatError positioned at its field path."""
    first = e.errors()[0]
    path = ".".join(str(part) for part in first["loc"])
    msg = str(first["msg"]).removeprefix("Value error, ")
    return FormatError(msg, path or None)
