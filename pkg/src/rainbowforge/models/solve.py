"""Pydantic models for exact solving and certification."""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from rainbowforge.models.assignment import RainbowAssignment


class SolveMethod(str, Enum):
    BRANCH_BOUND = "branch_bound"
    PROFILE_DP = "profile_dp"


class SearchBudget(BaseModel):
    """Resource limits for the exact engines."""

    model_config = ConfigDict(frozen=True)

    max_nodes: int = Field(default=10**8, gt=0)
    max_states: int = Field(default=10**8, gt=0)
    max_elapsed: float = Field(default=600.0, gt=0)  # seconds


class SearchStats(BaseModel):
    nodes: int = 0  # branch-and-bound nodes expanded
    states: int = 0  # DP states touched
    seeds: int = 0  # DP seed states (first k columns, up to color symmetry)
    state_estimate: int | None = None


class SolveResult(BaseModel):
    """An exact optimum with a witness assignment."""

    optimum: int
    witness: RainbowAssignment
    method: SolveMethod
    stats: SearchStats = Field(default_factory=SearchStats)
    elapsed: float = 0.0  # seconds
    lower_bound: int = 0  # generic bound the optimum was checked against
    seeded: bool = False  # incumbent came from a construction


class CertificateKind(str, Enum):
    EXACT = "exact"
    UPPER_ONLY = "upper_only"


class Certificate(BaseModel):
    """Whether a verified tRDF's weight meets the best lower bound available."""

    kind: CertificateKind
    weight: int
    lower_bound: int
    gap: int
    sources: list[str] = Field(default_factory=list)
