"""Executable checks of the structure forced on extremal rainbow dominating functions.

The audits trust their caller on minimality: an assignment passed to
`audit_weight_census_bounds` is assumed to be optimal, and nothing here solves.
"""

import logging

from rainbowforge.errors import ContractError
from rainbowforge.graphs.builders import build_generalized_petersen, is_cubic, outer
from rainbowforge.models.assignment import ColorSet, RainbowAssignment, TriPartition
from rainbowforge.models.audit import AuditProfile, AuditReport
from rainbowforge.models.graph import Graph, PetersenParams
from rainbowforge.rdf.verify import census, verify_trdf

logger = logging.getLogger(__name__)

PATTERN_PERIOD = 6


def _listing(vertices: list[int], limit: int = 12) -> str:
    shown = ", ".join(str(v) for v in vertices[:limit])
    return shown + (f", ... ({len(vertices)} total)" if len(vertices) > limit else "")


def _require_extremal(g: Graph, a: RainbowAssignment, t: int, numerator: int) -> None:
    """Contract for the extremal audits: cubic g, t colors, weight numerator/6 of |V|."""
    if not is_cubic(g):
        raise ContractError("extremal audits need a cubic graph")
    if a.t != t:
        raise ContractError(f"audit for t={t} got an assignment over {a.t} colors")
    if len(a) != g.n_vertices:
        raise ContractError(
            f"assignment has {len(a)} entries but the graph has {g.n_vertices} vertices"
        )
    if 6 * a.weight() != numerator * g.n_vertices:
        raise ContractError(
            f"weight {a.weight()} is not extremal: expected {numerator}/6 of "
            f"{g.n_vertices} vertices"
        )


def partition_failures(g: Graph, a: RainbowAssignment) -> list[int]:
    """Uncolored vertices whose neighbor color sets do not partition {1..t}.

    Uncolored neighbors are ignored; every remaining block must be nonempty,
    the blocks pairwise disjoint, and their union all t colors.
    """
    full = frozenset(range(1, a.t + 1))
    failures = []
    for v, nbrs in enumerate(g.adjacency):
        if a.colors[v]:
            continue
        blocks = [a.colors[u] for u in nbrs if a.colors[u]]
        union: ColorSet = frozenset().union(*blocks)
        if union != full or sum(len(b) for b in blocks) != len(union):
            failures.append(v)
    return failures


def _check_rainbow(report: AuditReport, g: Graph, a: RainbowAssignment) -> None:
    verdict = verify_trdf(g, a)
    report.add("rainbow", verdict.passed, "; ".join(verdict.describe()))


def _check_half_colored(report: AuditReport, g: Graph, a: RainbowAssignment) -> None:
    colored = sum(1 for s in a.colors if s)
    report.add(
        "half_colored",
        2 * colored == g.n_vertices,
        f"{colored} of {g.n_vertices} vertices colored",
    )


def _check_partitions(report: AuditReport, g: Graph, a: RainbowAssignment) -> None:
    failures = partition_failures(g, a)
    details = f"offending vertices: {_listing(failures)}" if failures else ""
    report.add("neighbor_partition", not failures, details)


def audit_extremal_4(g: Graph, a: RainbowAssignment) -> AuditReport:
    """Structure of a 4RDF of weight 2|V|/3 on a cubic graph.

    Half the vertices are colored, with |V|/3 singletons and |V|/6 pairs; colored and
    uncolored vertices form the two sides of a bipartition; and the neighbor sets of each
    uncolored vertex partition {1, 2, 3, 4}.
    """
    _require_extremal(g, a, 4, 4)
    report = AuditReport(profile=AuditProfile.EXTREMAL4)
    _check_rainbow(report, g, a)
    _check_half_colored(report, g, a)

    counts = census(a)
    n_vertices = g.n_vertices
    report.add(
        "census",
        3 * counts.n(1) == n_vertices
        and 6 * counts.n(2) == n_vertices
        and counts.n(3) == counts.n(4) == 0,
        f"n_1={counts.n(1)} n_2={counts.n(2)} n_3={counts.n(3)} n_4={counts.n(4)}",
    )

    same_side = [(x, y) for x, y in g.edges() if bool(a.colors[x]) == bool(a.colors[y])]
    report.add(
        "colored_bipartition",
        not same_side,
        f"edges within one side: {same_side[:12]}" if same_side else "",
    )
    _check_partitions(report, g, a)
    logger.debug("extremal4 audit: %s", [(c.name, c.passed) for c in report.checks])
    return report


def audit_extremal_5(g: Graph, a: RainbowAssignment) -> AuditReport:
    """Structure of a 5RDF of weight 5|V|/6 on a cubic graph.

    Half the vertices are colored and independent, every uncolored vertex has three
    colored neighbors whose sets partition {1, ..., 5}, and no vertex carries 4 or 5 colors.
    """
    _require_extremal(g, a, 5, 5)
    report = AuditReport(profile=AuditProfile.EXTREMAL5)
    _check_rainbow(report, g, a)
    _check_half_colored(report, g, a)

    touching = [(x, y) for x, y in g.edges() if a.colors[x] and a.colors[y]]
    report.add(
        "colored_independent",
        not touching,
        f"adjacent colored vertices: {touching[:12]}" if touching else "",
    )
    surrounded = [
        v
        for v, nbrs in enumerate(g.adjacency)
        if not a.colors[v] and not all(a.colors[u] for u in nbrs)
    ]
    report.add(
        "three_colored_neighbors",
        not surrounded,
        f"uncolored vertices with an uncolored neighbor: {_listing(surrounded)}"
        if surrounded
        else "",
    )
    _check_partitions(report, g, a)
    counts = census(a)
    report.add(
        "census",
        counts.n(4) == counts.n(5) == 0,
        f"n_4={counts.n(4)} n_5={counts.n(5)}",
    )
    return report


def _match_outer_cycle(
    sequence: list[ColorSet], t: int
) -> tuple[ColorSet, ColorSet, ColorSet] | None:
    """Blocks (A, B, C) when sequence reads A, 0, B, 0, C, 0 repeated, else None."""
    if len(sequence) % PATTERN_PERIOD:
        return None
    for i, colors in enumerate(sequence):
        if colors != sequence[i % PATTERN_PERIOD]:
            return None
    a, gap1, b, gap2, c, gap3 = sequence[:PATTERN_PERIOD]
    if gap1 or gap2 or gap3 or not (a and b and c):
        return None
    blocks = (a, b, c)
    if sum(len(block) for block in blocks) != t or a | b | c != frozenset(range(1, t + 1)):
        return None
    return blocks


def audit_outer_pattern(params: PetersenParams, a: RainbowAssignment) -> AuditReport:
    """Find the rotation and reflection under which the outer cycle reads A-0-B-0-C-0.

    The assignment must be an extremal tRDF (weight t n / 3, t >= 3) with the neighbor
    partition property; otherwise ContractError is raised before any pattern is sought.
    """
    g = build_generalized_petersen(params)
    n, t = params.n, a.t
    if t < 3:
        raise ContractError(f"outer-cycle pattern needs t >= 3, got t={t}")
    verdict = verify_trdf(g, a)
    if not verdict.passed:
        raise ContractError("outer-cycle audit requires a tRDF", verdict.describe())
    if 3 * a.weight() != t * n:
        raise ContractError(
            f"weight {a.weight()} on {params} is not extremal: t n / 3 = {t * n}/3"
        )
    failures = partition_failures(g, a)
    if failures:
        raise ContractError(
            "outer-cycle audit requires a neighbor partition at every uncolored vertex",
            [f"vertex {v}" for v in failures],
        )

    report = AuditReport(profile=AuditProfile.OUTER)
    report.add("neighbor_partition", True)
    for reflected in (False, True):
        for phase in range(n):
            step = -1 if reflected else 1
            sequence = [a.colors[outer(params, phase + step * i)] for i in range(n)]
            blocks = _match_outer_cycle(sequence, t)
            if blocks is None:
                continue
            partition = TriPartition(t=t, a=blocks[0], b=blocks[1], c=blocks[2])
            report.phase, report.reflected = phase, reflected
            report.partition = [sorted(block) for block in partition.blocks()]
            report.add(
                "outer_period_6",
                True,
                f"phase {phase}{' reflected' if reflected else ''}",
            )
            return report
    report.add("outer_period_6", False, f"no rotation or reflection of {params} matches")
    return report


def audit_weight_census_bounds(a: RainbowAssignment, g: Graph, t: int) -> AuditReport:
    """Census consequences of low weight for a minimum-weight tRDF.

    For t = 4, weight below 3|V|/4 forces n_3 = n_4 = 0; for t = 5, weight below |V|
    forces n_4 = n_5 = 0. Heavier assignments and other t pass vacuously.
    """
    if a.t != t:
        raise ContractError(f"census audit for t={t} got an assignment over {a.t} colors")
    report = AuditReport(profile=AuditProfile.CENSUS)
    counts = census(a)
    weight, n_vertices = a.weight(), g.n_vertices
    if t == 4 and 4 * weight < 3 * n_vertices:
        report.add(
            "n3_n4_vanish",
            counts.n(3) == counts.n(4) == 0,
            f"weight {weight} < 3|V|/4; n_3={counts.n(3)} n_4={counts.n(4)}",
        )
    elif t == 5 and weight < n_vertices:
        report.add(
            "n4_n5_vanish",
            counts.n(4) == counts.n(5) == 0,
            f"weight {weight} < |V|; n_4={counts.n(4)} n_5={counts.n(5)}",
        )
    else:
        report.add("census_bound", True, f"vacuous for t={t} at weight {weight}")
    return report
