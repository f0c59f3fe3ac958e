"""Exact rainbow domination of P(n, k) by dynamic programming over columns.

Vertices are placed column by column (u_0, v_0, u_1, v_1, ...). A placed vertex stays on the
frontier until its last neighbor is placed: u_j leaves once u_{j+1} is in, v_j once
v_{j+k} is in, and the wrap-around vertices u_0 and v_0 .. v_{k-1} stay until the final
columns close the cycles. Each frontier vertex is summarized by one integer status:
its color mask when colored, or its still-missing colors shifted left by t when
uncolored. States equal up to a permutation of the colors are merged.
"""

import logging
from time import perf_counter

from rainbowforge.errors import (
    ContractError,
    RainbowForgeError,
    SearchBudgetExceeded,
    StateSpaceRefused,
)
from rainbowforge.graphs.builders import build_generalized_petersen
from rainbowforge.models.assignment import MAX_COLORS, RainbowAssignment, full_mask
from rainbowforge.models.graph import Graph, PetersenParams
from rainbowforge.models.solve import SearchBudget, SearchStats, SolveMethod, SolveResult
from rainbowforge.rdf.verify import require_trdf, verify_trdf
from rainbowforge.solver.residual import Discharging

logger = logging.getLogger(__name__)

State = tuple[int, ...]
Perm = tuple[int, ...]  # perm[c] = new bit index of color bit c
Layer = dict[State, tuple[State, int, Perm]]  # new state -> (previous state, mask, perm)


def column_order(params: PetersenParams) -> list[int]:
    n = params.n
    return [v for i in range(n) for v in (i, n + i)]


def state_space_estimate(params: PetersenParams, t: int) -> int:
    """Rough count of DP states: color choices on the first k columns times the window.

    The first k columns fix 2k vertices with 2^t color sets each; the trailing window
    holds about k + 1 statuses of 2^(t+1) values each.
    """
    k = params.canonical().k
    return (4**t) ** k * (2 ** (t + 1)) ** (k + 1)


def apply_perm(bits: int, perm: Perm) -> int:
    out = 0
    for c, target in enumerate(perm):
        if bits >> c & 1:
            out |= 1 << target
    return out


def canonical_state(state: State, t: int) -> tuple[State, Perm]:
    """Relabel colors by their per-position signature so equivalent states coincide."""
    signatures = []
    for c in range(t):
        sig = 0
        for status in state:
            sig = (sig << 2) | (status >> c & 1) | ((status >> (t + c) & 1) << 1)
        signatures.append((sig, c))
    signatures.sort()
    perm_list = [0] * t
    for rank, (_, c) in enumerate(signatures):
        perm_list[c] = rank
    perm = tuple(perm_list)
    full = full_mask(t)
    relabeled = tuple(
        apply_perm(status & full, perm) | (apply_perm(status >> t, perm) << t)
        for status in state
    )
    return relabeled, perm


class _Step:
    """Precomputed bookkeeping for placing the vertex at one position of the order."""

    def __init__(
        self,
        vertex: int,
        neighbor_slots: list[int],
        closing_slots: list[int],
        closes_vertex: bool,
        kept_slots: list[int],
        free_after: list[int],
    ) -> None:
        self.vertex = vertex
        self.neighbor_slots = neighbor_slots  # prev-frontier slots adjacent to vertex
        self.closing_slots = closing_slots  # prev-frontier slots whose last neighbor is vertex
        self.closes_vertex = closes_vertex  # vertex has no unplaced neighbor afterwards
        self.kept_slots = kept_slots  # prev-frontier slots surviving into the new frontier
        self.free_after = free_after  # unplaced neighbors of each new-frontier vertex


def plan_steps(g: Graph, order: list[int]) -> list[_Step]:
    pos = {v: p for p, v in enumerate(order)}
    last = [max([pos[v]] + [pos[u] for u in g.adjacency[v]]) for v in range(g.n_vertices)]
    steps = []
    frontier: list[int] = []
    for p, x in enumerate(order):
        slot = {v: i for i, v in enumerate(frontier)}
        neighbor_slots = [slot[u] for u in g.adjacency[x] if pos[u] < p]
        closing_slots = [i for i, v in enumerate(frontier) if last[v] == p]
        kept_slots = [i for i, v in enumerate(frontier) if last[v] > p]
        closes_vertex = last[x] == p
        frontier = [frontier[i] for i in kept_slots] + ([] if closes_vertex else [x])
        free_after = [sum(1 for u in g.adjacency[v] if pos[u] > p) for v in frontier]
        steps.append(
            _Step(x, neighbor_slots, closing_slots, closes_vertex, kept_slots, free_after)
        )
    return steps


class ProfileDP:
    """Minimum-weight tRDF of a graph along a fixed vertex order."""

    def __init__(
        self,
        g: Graph,
        order: list[int],
        t: int,
        budget: SearchBudget | None = None,
        initial: RainbowAssignment | None = None,
        seed_layer: int | None = None,
    ) -> None:
        if not 1 <= t <= MAX_COLORS:
            raise ContractError(f"t must lie in 1..{MAX_COLORS}, got {t}")
        if sorted(order) != list(range(g.n_vertices)):
            raise ContractError("vertex order must list every vertex once")
        self.g = g
        self.order = order
        self.t = t
        self.budget = budget or SearchBudget()
        self.charges = Discharging(t, g.max_degree())
        self.lower_bound = self.charges.root(g.n_vertices)
        self.seed_layer = seed_layer
        self.best = g.n_vertices
        self.best_witness = RainbowAssignment(
            t=t, colors=tuple(frozenset({1}) for _ in range(g.n_vertices))
        )
        self.seeded = False
        if initial is not None:
            if initial.t != t:
                raise ContractError(f"seed uses t={initial.t}, search runs with t={t}")
            require_trdf(g, initial, "profile DP seed")
            if initial.weight() < self.best:
                self.best, self.best_witness, self.seeded = initial.weight(), initial, True
        self.stats = SearchStats()

    def solve(self) -> SolveResult:
        started = perf_counter()
        if self.best > self.lower_bound:
            self._run(started)
        return SolveResult(
            optimum=self.best,
            witness=self.best_witness,
            method=SolveMethod.PROFILE_DP,
            stats=self.stats,
            elapsed=perf_counter() - started,
            lower_bound=self.lower_bound,
            seeded=self.seeded,
        )

    def _run(self, started: float) -> None:
        """Raise a weight cap from the lower bound until some tRDF fits under it."""
        steps = plan_steps(self.g, self.order)
        for cap in range(self.lower_bound, self.best):
            witness = self._sweep(steps, cap, started)
            if witness is None:
                logger.debug("no %d-rainbow function of weight <= %d", self.t, cap)
                continue
            verdict = verify_trdf(self.g, witness)
            if not verdict.passed or witness.weight() > cap:
                raise RainbowForgeError("profile DP produced an invalid witness")
            self.best, self.best_witness = witness.weight(), witness
            break
        logger.info(
            "profile DP t=%d on %d vertices: optimum %d, %d states",
            self.t,
            self.g.n_vertices,
            self.best,
            self.stats.states,
        )

    def _sweep(self, steps: list[_Step], cap: int, started: float) -> RainbowAssignment | None:
        """A minimum-weight tRDF among those of weight <= cap, or None."""
        t = self.t
        full = full_mask(t)
        n_vertices = self.g.n_vertices
        masks = range(1 << t)
        layers: list[Layer] = []
        states: dict[State, int] = {(): 0}

        for p, step in enumerate(steps):
            if perf_counter() - started > self.budget.max_elapsed:
                raise SearchBudgetExceeded(
                    f"profile DP ran out of time at position {p} under cap {cap}",
                    incumbent=self.best_witness,
                    lower_bound=cap,
                    nodes=self.stats.states,
                )
            unplaced = n_vertices - p - 1
            nxt: dict[State, int] = {}
            back: Layer = {}
            for state, weight in states.items():
                for m in masks:
                    new_weight = weight + m.bit_count()
                    if new_weight > cap:
                        continue
                    succ = self._advance(state, m, step, full)
                    if succ is None:
                        continue
                    inflow = 0
                    for status, free in zip(succ, step.free_after, strict=True):
                        if status and status <= full:
                            inflow += self.charges.outflow(status.bit_count(), free, 0)
                    if new_weight + self.charges.residual(unplaced, inflow) > cap:
                        continue
                    key, perm = canonical_state(succ, t) if t > 1 else (succ, (0,))
                    self.stats.states += 1
                    if key not in nxt or new_weight < nxt[key]:
                        nxt[key] = new_weight
                        back[key] = (state, m, perm)
            states = nxt
            layers.append(back)
            if p == self.seed_layer:
                self.stats.seeds = len(states)
            if not states:
                return None
        return self._reconstruct(layers) if () in states else None

    def _advance(self, state: State, m: int, step: _Step, full: int) -> State | None:
        t = self.t
        statuses = list(state)
        seen = 0
        clear = ~(m << t)
        for i in step.neighbor_slots:
            seen |= statuses[i] & full
            statuses[i] &= clear
        for i in step.closing_slots:
            if statuses[i] >> t:
                return None
        own = m if m else (full & ~seen) << t
        if step.closes_vertex:
            if own >> t:
                return None
            return tuple(statuses[i] for i in step.kept_slots)
        return tuple(statuses[i] for i in step.kept_slots) + (own,)

    def _reconstruct(self, layers: list[Layer]) -> RainbowAssignment:
        masks = [0] * self.g.n_vertices
        to_final: Perm = tuple(range(self.t))
        key: State = ()
        for p in range(len(layers) - 1, -1, -1):
            prev_key, m, perm = layers[p][key]
            masks[self.order[p]] = apply_perm(apply_perm(m, perm), to_final)
            to_final = tuple(to_final[perm[c]] for c in range(self.t))
            key = prev_key
        return RainbowAssignment.from_masks(self.t, masks)


def solve_profile_dp(
    params: PetersenParams,
    t: int,
    budget: SearchBudget | None = None,
    initial: RainbowAssignment | None = None,
) -> SolveResult:
    """gamma_rt(P(n, k)) by the column DP; refuses when the state estimate is too large."""
    budget = budget or SearchBudget()
    canon = params.canonical()
    estimate = state_space_estimate(canon, t)
    if estimate > budget.max_states:
        raise StateSpaceRefused(
            f"profile DP on {canon} with t={t} needs about {estimate} states, "
            f"budget allows {budget.max_states}",
            estimate=estimate,
        )
    g = build_generalized_petersen(canon)
    dp = ProfileDP(g, column_order(canon), t, budget, initial, seed_layer=2 * canon.k - 1)
    result = dp.solve()
    result.stats.state_estimate = estimate
    return result
