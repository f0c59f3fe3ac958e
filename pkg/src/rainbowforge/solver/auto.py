"""Engine dispatch and construction seeding."""

import logging

from rainbowforge.catalog.bounds import is_characterized_extremal
from rainbowforge.constructions.example import example_4rdf
from rainbowforge.constructions.patterns import PATTERN_COLORS, extremal_pattern
from rainbowforge.errors import ContractError
from rainbowforge.graphs.builders import build_example_graph, build_generalized_petersen
from rainbowforge.models.assignment import MAX_COLORS, RainbowAssignment
from rainbowforge.models.graph import Graph, PetersenParams
from rainbowforge.models.solve import SearchBudget, SearchStats, SolveMethod, SolveResult
from rainbowforge.rdf.verify import require_trdf
from rainbowforge.solver.branch_bound import solve_branch_bound
from rainbowforge.solver.certify import best_lower_bound
from rainbowforge.solver.profile_dp import solve_profile_dp, state_space_estimate

logger = logging.getLogger(__name__)


def construction_seed(target: Graph | PetersenParams, t: int) -> RainbowAssignment | None:
    """A known tRDF of the target when one of the explicit constructions applies."""
    if isinstance(target, PetersenParams):
        canon = target.canonical()
        if t in PATTERN_COLORS and is_characterized_extremal(canon.n, canon.k, t):
            return extremal_pattern(canon.n, canon.k, t)
        return None
    if t == 4 and target.adjacency == build_example_graph().adjacency:
        return example_4rdf()
    return None


def solve_auto(
    target: Graph | PetersenParams,
    t: int,
    budget: SearchBudget | None = None,
    method: SolveMethod | None = None,
    initial: RainbowAssignment | None = None,
) -> SolveResult:
    """Solve with whichever engine fits the target.

    Without a forced method, a seed (or the all-{1} function) that meets the best proven
    lower bound is returned at once. Otherwise P(n, k) parameters go to the profile DP
    when its state estimate fits the budget and to branch-and-bound when it does not;
    graphs always go to branch-and-bound. Forcing method=PROFILE_DP keeps the DP's
    refusal on an oversized estimate.
    """
    if not 1 <= t <= MAX_COLORS:
        raise ContractError(f"t must lie in 1..{MAX_COLORS}, got {t}")
    budget = budget or SearchBudget()
    seed = initial if initial is not None else construction_seed(target, t)
    if seed is not None and initial is None:
        logger.info("seeding the incumbent with a construction of weight %d", seed.weight())

    if method is SolveMethod.PROFILE_DP:
        if not isinstance(target, PetersenParams):
            raise ContractError("the profile DP needs P(n, k) parameters, not a graph")
        return solve_profile_dp(target, t, budget, seed)
    if method is SolveMethod.BRANCH_BOUND:
        return solve_branch_bound(_graph_of(target), t, budget, seed)

    estimate: int | None = None
    engine = SolveMethod.BRANCH_BOUND
    if isinstance(target, PetersenParams):
        estimate = state_space_estimate(target, t)
        if estimate <= budget.max_states:
            engine = SolveMethod.PROFILE_DP

    g = _graph_of(target)
    params = target if isinstance(target, PetersenParams) else None
    settled = _at_lower_bound(g, t, seed, params, engine, estimate)
    if settled is not None:
        return settled

    if engine is SolveMethod.PROFILE_DP:
        assert params is not None
        return solve_profile_dp(params, t, budget, seed)
    if params is not None:
        logger.info(
            "profile DP estimate %d exceeds %d states, using branch-and-bound",
            estimate,
            budget.max_states,
        )
    return solve_branch_bound(g, t, budget, seed)


def _graph_of(target: Graph | PetersenParams) -> Graph:
    if isinstance(target, PetersenParams):
        return build_generalized_petersen(target.canonical())
    return target


def _at_lower_bound(
    g: Graph,
    t: int,
    seed: RainbowAssignment | None,
    params: PetersenParams | None,
    engine: SolveMethod,
    estimate: int | None,
) -> SolveResult | None:
    """The seed or the all-{1} function as an exact result, if it meets the lower bound."""
    if seed is not None:
        if seed.t != t:
            raise ContractError(f"seed uses t={seed.t}, search runs with t={t}")
        require_trdf(g, seed, "solver seed")
    lower, sources = best_lower_bound(g, t, params)
    trivial = RainbowAssignment(
        t=t, colors=tuple(frozenset({1}) for _ in range(g.n_vertices))
    )
    candidate = seed if seed is not None and seed.weight() < trivial.weight() else trivial
    if candidate.weight() != lower:
        return None
    logger.info(
        "weight %d meets the lower bound from %s, no search needed",
        lower,
        ", ".join(sources),
    )
    return SolveResult(
        optimum=lower,
        witness=candidate,
        method=engine,
        stats=SearchStats(state_estimate=estimate),
        lower_bound=lower,
        seeded=candidate is seed,
    )
