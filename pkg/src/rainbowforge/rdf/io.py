"""JSON form of rainbow assignments: {"t": T, "colors": [[...], ...]}, inner lists ascending."""

import json

from pydantic import ValidationError

from rainbowforge.errors import FormatError
from rainbowforge.formats import format_error, load_json
from rainbowforge.models.assignment import RainbowAssignment


def parse_assignment(text: str, n_vertices: int | None = None) -> RainbowAssignment:
    """Parse an assignment, optionally checking it against a declared vertex count."""
    data = load_json(text)
    if not isinstance(data, dict):
        raise FormatError("assignment document must be a JSON object", "line 1, column 1")
    try:
        a = RainbowAssignment.model_validate(data)
    except ValidationError as e:
        raise format_error(e) from e
    if n_vertices is not None and len(a) != n_vertices:
        raise FormatError(
            f"assignment has {len(a)} entries, expected {n_vertices}", "colors"
        )
    return a


def serialize_assignment(a: RainbowAssignment) -> str:
    return json.dumps(a.model_dump(mode="json")) + "\n"
