"""Structural audits of extremal rainbow dominating functions."""

from rainbowforge.audit.structure import (
    audit_extremal_4,
    audit_extremal_5,
    audit_outer_pattern,
    audit_weight_census_bounds,
    partition_failures,
)

__all__ = [
    "audit_extremal_4",
    "audit_extremal_5",
    "audit_outer_pattern",
    "audit_weight_census_bounds",
    "partition_failures",
]
