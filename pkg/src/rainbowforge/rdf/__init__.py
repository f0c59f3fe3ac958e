"""Rainbow assignments: verification, census and relabeling."""

from rainbowforge.rdf.io import parse_assignment, serialize_assignment
from rainbowforge.rdf.transform import (
    canonical_color_order,
    canonicalize_colors,
    color_classes,
    permute_colors,
    relabel_vertices,
    restrict_colors,
)
from rainbowforge.rdf.verify import census, is_singleton, require_trdf, verify_trdf, weight

__all__ = [
    "canonical_color_order",
    "canonicalize_colors",
    "census",
    "color_classes",
    "is_singleton",
    "parse_assignment",
    "permute_colors",
    "relabel_vertices",
    "require_trdf",
    "restrict_colors",
    "serialize_assignment",
    "verify_trdf",
    "weight",
]
