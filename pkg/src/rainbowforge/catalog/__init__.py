"""Theorem catalog and closed-form bound calculators."""

from rainbowforge.catalog.bounds import (
    bounds_pckk,
    characterization_r1,
    characterization_r2,
    generic_lower_bound,
    is_characterized_extremal,
    known_exact_pn1,
    monotone_envelope,
)
from rainbowforge.catalog.registry import TheoremRegistry, default_registry

__all__ = [
    "TheoremRegistry",
    "bounds_pckk",
    "characterization_r1",
    "characterization_r2",
    "default_registry",
    "generic_lower_bound",
    "is_characterized_extremal",
    "known_exact_pn1",
    "monotone_envelope",
]
