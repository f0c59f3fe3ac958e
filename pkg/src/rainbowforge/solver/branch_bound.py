"""Exact rainbow domination by depth-first branch-and-bound on arbitrary graphs."""

import logging
from functools import cache
from time import perf_counter

import networkx as nx

from rainbowforge.errors import ContractError, SearchBudgetExceeded
from rainbowforge.graphs.builders import to_networkx
from rainbowforge.models.assignment import MAX_COLORS, RainbowAssignment, full_mask
from rainbowforge.models.graph import Graph
from rainbowforge.models.solve import SearchBudget, SearchStats, SolveMethod, SolveResult
from rainbowforge.rdf.verify import require_trdf
from rainbowforge.solver.residual import Discharging

logger = logging.getLogger(__name__)

ELAPSED_CHECK_INTERVAL = 1024  # nodes between clock reads


def branching_order(g: Graph) -> list[int]:
    """Maximum degree first; equal degrees in breadth-first order from the lowest id.

    Ties follow BFS discovery, not plain id order, so a vertex becomes fully surrounded
    (and checkable) soon after it is placed. The optimum does not depend on the order.
    """
    nxg = to_networkx(g)
    discovered: list[int] = []
    reached: set[int] = set()
    for root in range(g.n_vertices):
        if root in reached:
            continue
        component = [root] + [v for _, v in nx.bfs_edges(nxg, root, sort_neighbors=sorted)]
        reached.update(component)
        discovered += component
    return sorted(discovered, key=lambda v: -g.degree(v))


@cache
def symmetric_masks(t: int, used: int) -> tuple[int, ...]:
    """Color sets allowed once colors 1..used have appeared, lightest first.

    Colors beyond `used` may only be introduced in order: a set may contain
    used+1..used+j for some j >= 0, and nothing above that.
    """
    masks = [m for m in range(1 << t) if (fresh := m >> used) & (fresh + 1) == 0]
    return tuple(sorted(masks, key=lambda m: (m.bit_count(), m)))


class BranchAndBound:
    """One search for gamma_rt(g).

    Vertices are placed along `branching_order`; a vertex takes color sets in increasing
    size. A partial assignment is cut when its weight plus the discharging residual
    reaches the incumbent, or when an uncolored vertex with every neighbor placed misses
    a color.
    """

    def __init__(
        self,
        g: Graph,
        t: int,
        budget: SearchBudget | None = None,
        initial: RainbowAssignment | None = None,
    ) -> None:
        if not 1 <= t <= MAX_COLORS:
            raise ContractError(f"t must lie in 1..{MAX_COLORS}, got {t}")
        self.g = g
        self.t = t
        self.budget = budget or SearchBudget()
        self.full = full_mask(t)
        self.adjacency = g.adjacency
        self.order = branching_order(g)
        self.charges = Discharging(t, g.max_degree())
        self.lower_bound = self.charges.root(g.n_vertices)

        # every vertex colored {1} is always a tRDF
        self.best_masks = [1] * g.n_vertices
        self.best = g.n_vertices
        self.seeded = False
        if initial is not None:
            self._adopt(initial)

        n = g.n_vertices
        self.mask = [0] * n
        self.placed = [False] * n
        self.seen = [0] * n  # union of the placed neighbors' colors
        self.free = [len(nbrs) for nbrs in g.adjacency]  # unplaced neighbors
        self.empty_placed = [0] * n  # placed uncolored neighbors
        self.flow = [0] * n
        self.inflow = 0
        self.weight = 0
        self.nodes = 0
        self._undo: list[list[tuple[int, int, int]]] = []
        self._started = 0.0

    def _adopt(self, initial: RainbowAssignment) -> None:
        if initial.t != self.t:
            raise ContractError(f"seed uses t={initial.t}, search runs with t={self.t}")
        require_trdf(self.g, initial, "branch-and-bound seed")
        if initial.weight() < self.best:
            self.best_masks = initial.masks()
            self.best = initial.weight()
            self.seeded = True

    def solve(self) -> SolveResult:
        self._started = perf_counter()
        if self.best > self.lower_bound:
            self._search(0, 0)
        elapsed = perf_counter() - self._started
        logger.info(
            "branch-and-bound t=%d on %d vertices: optimum %d after %d nodes",
            self.t,
            self.g.n_vertices,
            self.best,
            self.nodes,
        )
        return SolveResult(
            optimum=self.best,
            witness=RainbowAssignment.from_masks(self.t, self.best_masks),
            method=SolveMethod.BRANCH_BOUND,
            stats=SearchStats(nodes=self.nodes),
            elapsed=elapsed,
            lower_bound=self.lower_bound,
            seeded=self.seeded,
        )

    def _check_budget(self) -> None:
        over_nodes = self.nodes > self.budget.max_nodes
        over_time = (
            self.nodes % ELAPSED_CHECK_INTERVAL == 0
            and perf_counter() - self._started > self.budget.max_elapsed
        )
        if over_nodes or over_time:
            incumbent = RainbowAssignment.from_masks(self.t, self.best_masks)
            raise SearchBudgetExceeded(
                f"search budget exhausted after {self.nodes} nodes "
                f"(incumbent {self.best}, lower bound {self.lower_bound})",
                incumbent=incumbent,
                lower_bound=self.lower_bound,
                nodes=self.nodes,
            )

    def _search(self, depth: int, used: int) -> None:
        self.nodes += 1
        self._check_budget()
        n = self.g.n_vertices
        if depth == n:
            if self.weight < self.best:
                self.best = self.weight
                self.best_masks = list(self.mask)
                logger.debug("incumbent improved to %d at node %d", self.best, self.nodes)
            return
        if self.weight + self.charges.residual(n - depth, self.inflow) >= self.best:
            return

        x = self.order[depth]
        for m in symmetric_masks(self.t, used):
            if self.weight + m.bit_count() >= self.best:
                break
            if self._place(x, m):
                self._search(depth + 1, used + (m >> used).bit_length())
            self._unplace(x, m)
            if self.best <= self.lower_bound:
                return

    def _refresh_flow(self, v: int) -> None:
        flow = self.charges.outflow(self.mask[v].bit_count(), self.free[v], self.empty_placed[v])
        self.inflow += flow - self.flow[v]
        self.flow[v] = flow

    def _place(self, x: int, m: int) -> bool:
        nbrs = self.adjacency[x]
        saved = [(y, self.seen[y], self.flow[y]) for y in nbrs]
        saved.append((x, self.seen[x], self.flow[x]))
        self._undo.append(saved)

        self.placed[x] = True
        self.mask[x] = m
        self.weight += m.bit_count()
        for y in nbrs:
            self.free[y] -= 1
            self.seen[y] |= m
            if not m:
                self.empty_placed[y] += 1
        self._refresh_flow(x)
        for y in nbrs:
            if self.placed[y]:
                self._refresh_flow(y)

        if not m and self.free[x] == 0 and self.seen[x] != self.full:
            return False
        for y in nbrs:
            if (
                self.placed[y]
                and not self.mask[y]
                and self.free[y] == 0
                and self.seen[y] != self.full
            ):
                return False
        return True

    def _unplace(self, x: int, m: int) -> None:
        for y in self.adjacency[x]:
            self.free[y] += 1
            if not m:
                self.empty_placed[y] -= 1
        for v, seen, flow in self._undo.pop():
            self.seen[v] = seen
            self.inflow += flow - self.flow[v]
            self.flow[v] = flow
        self.placed[x] = False
        self.mask[x] = 0
        self.weight -= m.bit_count()


def solve_branch_bound(
    g: Graph,
    t: int,
    budget: SearchBudget | None = None,
    initial: RainbowAssignment | None = None,
) -> SolveResult:
    """gamma_rt(g) with a witness; raises SearchBudgetExceeded when the budget runs out."""
    return BranchAndBound(g, t, budget, initial).solve()
