"""The rainbow domination condition and the quantities derived from an assignment."""

from rainbowforge.errors import ContractError
from rainbowforge.models.assignment import (
    Census,
    RainbowAssignment,
    TrdfVerdict,
    Violation,
    colors_of,
    full_mask,
)
from rainbowforge.models.graph import Graph


def weight(a: RainbowAssignment) -> int:
    return a.weight()


def verify_trdf(g: Graph, a: RainbowAssignment) -> TrdfVerdict:
    """Check that every uncolored vertex sees all t colors among its neighbors.

    Failures list every offending vertex together with the exact colors it lacks.
    """
    if len(a) != g.n_vertices:
        raise ContractError(
            f"assignment has {len(a)} entries but the graph has {g.n_vertices} vertices"
        )
    masks = a.masks()
    full = full_mask(a.t)
    violations = []
    for v, nbrs in enumerate(g.adjacency):
        if masks[v]:
            continue
        seen = 0
        for u in nbrs:
            seen |= masks[u]
        if seen != full:
            violations.append(Violation(vertex=v, missing=sorted(colors_of(full & ~seen))))
    return TrdfVerdict(passed=not violations, violations=violations)


def require_trdf(g: Graph, a: RainbowAssignment, what: str) -> None:
    """Raise ContractError unless a is a tRDF of g."""
    verdict = verify_trdf(g, a)
    if not verdict.passed:
        raise ContractError(
            f"{what} requires a {a.t}-rainbow dominating function", verdict.describe()
        )


def is_singleton(a: RainbowAssignment) -> bool:
    return all(len(color_set) <= 1 for color_set in a.colors)


def census(a: RainbowAssignment) -> Census:
    n_by_size = [0] * (a.t + 1)
    u_by_color = [0] * a.t
    for color_set in a.colors:
        n_by_size[len(color_set)] += 1
        for c in color_set:
            u_by_color[c - 1] += 1
    return Census(n_by_size=n_by_size, u_by_color=u_by_color)
