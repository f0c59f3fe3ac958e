"""Pydantic models for RainbowForge."""

from rainbowforge.models.assignment import (
    MAX_COLORS,
    Census,
    ColorSet,
    RainbowAssignment,
    TrdfVerdict,
    TriPartition,
    Violation,
)
from rainbowforge.models.audit import AuditCheck, AuditProfile, AuditReport
from rainbowforge.models.bounds import (
    BoundMode,
    BoundReport,
    TableRow,
    TheoremEntry,
    TheoremKind,
)
from rainbowforge.models.graph import Graph, GraphDocument, PetersenParams
from rainbowforge.models.solve import (
    Certificate,
    CertificateKind,
    SearchBudget,
    SearchStats,
    SolveMethod,
    SolveResult,
)

__all__ = [
    "MAX_COLORS",
    "AuditCheck",
    "AuditProfile",
    "AuditReport",
    "BoundMode",
    "BoundReport",
    "Census",
    "Certificate",
    "CertificateKind",
    "ColorSet",
    "Graph",
    "GraphDocument",
    "PetersenParams",
    "RainbowAssignment",
    "SearchBudget",
    "SearchStats",
    "SolveMethod",
    "SolveResult",
    "TableRow",
    "TheoremEntry",
    "TheoremKind",
    "TrdfVerdict",
    "TriPartition",
    "Violation",
]
