"""Exact engines for gamma_rt and certificates for candidate assignments."""

from rainbowforge.solver.auto import construction_seed, solve_auto
from rainbowforge.solver.branch_bound import BranchAndBound, branching_order, solve_branch_bound
from rainbowforge.solver.certify import best_lower_bound, certify
from rainbowforge.solver.profile_dp import (
    ProfileDP,
    column_order,
    solve_profile_dp,
    state_space_estimate,
)
from rainbowforge.solver.residual import Discharging

__all__ = [
    "BranchAndBound",
    "Discharging",
    "ProfileDP",
    "best_lower_bound",
    "branching_order",
    "certify",
    "column_order",
    "construction_seed",
    "solve_auto",
    "solve_branch_bound",
    "solve_profile_dp",
    "state_space_estimate",
]
