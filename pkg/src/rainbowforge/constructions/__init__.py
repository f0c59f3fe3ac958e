"""Explicit constructions of rainbow dominating functions."""

from rainbowforge.constructions.example import example_4rdf
from rainbowforge.constructions.lift import lift, rainbow_monotone_projection
from rainbowforge.constructions.patterns import (
    check_pattern_domain,
    default_tripartition,
    extremal_pattern,
)

__all__ = [
    "check_pattern_domain",
    "default_tripartition",
    "example_4rdf",
    "extremal_pattern",
    "lift",
    "rainbow_monotone_projection",
]
