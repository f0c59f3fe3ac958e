"""Main Workbench interface for RainbowForge."""

import logging
from pathlib import Path

from rainbowforge.audit.structure import (
    audit_extremal_4,
    audit_extremal_5,
    audit_outer_pattern,
    audit_weight_census_bounds,
)
from rainbowforge.catalog.bounds import DEFAULT_T_MAX, bounds_pckk, monotone_envelope
from rainbowforge.catalog.registry import TheoremRegistry, default_registry
from rainbowforge.errors import ContractError, SearchBudgetExceeded, StateSpaceRefused
from rainbowforge.graphs.builders import build_generalized_petersen, petersen_params
from rainbowforge.graphs.io import parse_graph
from rainbowforge.models.assignment import RainbowAssignment, TrdfVerdict
from rainbowforge.models.audit import AuditProfile, AuditReport
from rainbowforge.models.bounds import BoundMode, BoundReport, TableRow, TheoremEntry
from rainbowforge.models.graph import Graph, PetersenParams
from rainbowforge.models.solve import Certificate, SearchBudget, SolveMethod, SolveResult
from rainbowforge.rdf.io import parse_assignment
from rainbowforge.rdf.verify import verify_trdf
from rainbowforge.solver.auto import solve_auto
from rainbowforge.solver.certify import certify

logger = logging.getLogger(__name__)


class Workbench:
    """Main interface for RainbowForge."""

    def __init__(
        self,
        budget: SearchBudget | None = None,
        registry: TheoremRegistry | None = None,
    ) -> None:
        """Initialize the workbench.

        Args:
            budget: Resource limits for every solve; defaults to SearchBudget().
            registry: Theorem catalog that bound sources must resolve in.
        """
        self.budget = budget or SearchBudget()
        self.registry = registry or default_registry()

    def petersen(self, n: int, k: int) -> Graph:
        return build_generalized_petersen(petersen_params(n, k))

    def load_graph(self, path: str | Path) -> Graph:
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Graph file not found: {path}")
        return parse_graph(path.read_text())

    def load_assignment(self, path: str | Path, g: Graph | None = None) -> RainbowAssignment:
        """Load an assignment, checking its length against g when given."""
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Assignment file not found: {path}")
        return parse_assignment(path.read_text(), g.n_vertices if g is not None else None)

    def verify(self, g: Graph, a: RainbowAssignment) -> TrdfVerdict:
        return verify_trdf(g, a)

    def solve(
        self,
        target: Graph | PetersenParams,
        t: int,
        method: SolveMethod | None = None,
        initial: RainbowAssignment | None = None,
    ) -> SolveResult:
        """Compute gamma_rt exactly within the workbench budget.

        Args:
            target: A graph, or P(n, k) parameters.
            t: Number of colors.
            method: Force an engine; by default P(n, k) goes to the profile DP when it fits
                the state budget.
            initial: Optional tRDF to start the incumbent from.

        Returns:
            SolveResult with the optimum and a witness.
        """
        return solve_auto(target, t, self.budget, method, initial)

    def certify(
        self,
        g: Graph,
        t: int,
        candidate: RainbowAssignment,
        params: PetersenParams | None = None,
    ) -> Certificate:
        return certify(g, t, candidate, params)

    def bounds(self, c: int, k: int, t: int, mode: BoundMode = BoundMode.CORRECTED) -> BoundReport:
        return self._checked(bounds_pckk(c, k, t, mode))

    def envelope(
        self, c: int, k: int, t_max: int = DEFAULT_T_MAX, mode: BoundMode = BoundMode.CORRECTED
    ) -> list[BoundReport]:
        return [self._checked(report) for report in monotone_envelope(c, k, t_max, mode)]

    def table(
        self,
        cs: list[int],
        ks: list[int],
        ts: list[int],
        mode: BoundMode = BoundMode.CORRECTED,
        solve: bool = False,
        method: SolveMethod | None = None,
    ) -> list[TableRow]:
        """One row per (c, k, t), ascending; solver values filled in when solve is set.

        method forces an engine for every solved row, as in solve.

        Rows whose solve runs out of budget or is refused keep solver_value empty and say
        so in method.
        """
        rows = []
        for c in sorted(set(cs)):
            for k in sorted(set(ks)):
                for t in sorted(set(ts)):
                    report = self.bounds(c, k, t, mode)
                    solver_value, outcome = None, ""
                    if solve:
                        solver_value, outcome = self._solve_row(
                            PetersenParams(n=c * k, k=k), t, method
                        )
                    rows.append(
                        TableRow(
                            c=c,
                            k=k,
                            n=report.n,
                            t=t,
                            lower=report.lower,
                            upper=report.upper,
                            exact=report.exact,
                            solver_value=solver_value,
                            method=outcome,
                            sources=report.sources,
                            mode=mode.value,
                        )
                    )
        return rows

    def _solve_row(
        self, params: PetersenParams, t: int, method: SolveMethod | None
    ) -> tuple[int | None, str]:
        try:
            result = self.solve(params, t, method)
        except SearchBudgetExceeded:
            logger.info("table row %s t=%d: budget exhausted", params, t)
            return None, "budget_exhausted"
        except StateSpaceRefused:
            logger.info("table row %s t=%d: refused", params, t)
            return None, "refused"
        return result.optimum, result.method.value

    def audit(
        self,
        profile: AuditProfile,
        g: Graph,
        a: RainbowAssignment,
        params: PetersenParams | None = None,
    ) -> AuditReport:
        """Run one structural audit; the outer-cycle profile needs P(n, k) parameters."""
        if profile is AuditProfile.EXTREMAL4:
            return audit_extremal_4(g, a)
        if profile is AuditProfile.EXTREMAL5:
            return audit_extremal_5(g, a)
        if profile is AuditProfile.CENSUS:
            return audit_weight_census_bounds(a, g, a.t)
        if params is None:
            raise ContractError("the outer-cycle audit needs P(n, k) parameters")
        if build_generalized_petersen(params).adjacency != g.adjacency:
            raise ContractError(f"graph is not {params} in the standard vertex numbering")
        return audit_outer_pattern(params, a)

    def theorems(self, t: int | None = None) -> list[TheoremEntry]:
        if t is None:
            return list(self.registry.theorems.values())
        return self.registry.for_colors(t)

    def _checked(self, report: BoundReport) -> BoundReport:
        for label in report.sources:
            # unknown labels raise KeyError
            self.registry.get(label)
        return report
