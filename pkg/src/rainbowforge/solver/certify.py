"""Certificates: does a verified tRDF meet a proven lower bound?"""

import logging

from rainbowforge.catalog.bounds import bounds_pckk, generic_lower_bound
from rainbowforge.errors import ContractError
from rainbowforge.models.assignment import RainbowAssignment
from rainbowforge.models.graph import Graph, PetersenParams
from rainbowforge.models.solve import Certificate, CertificateKind
from rainbowforge.rdf.verify import require_trdf

logger = logging.getLogger(__name__)


def best_lower_bound(
    g: Graph, t: int, params: PetersenParams | None = None
) -> tuple[int, list[str]]:
    """The strongest lower bound on gamma_rt(g) the catalog proves, with its sources.

    The degree bound is cited as LBKuzman on regular graphs and as MaxDegreeDischarging,
    its maximum-degree form, otherwise. Family bounds for P(ck, k) apply only when the
    caller says g is P(n, k) and k divides n.
    """
    degree = g.max_degree()
    if degree == 0:
        lower, sources = g.n_vertices, ["TrivialUpperBound"]
    else:
        regular = all(len(nbrs) == degree for nbrs in g.adjacency)
        label = "LBKuzman" if regular else "MaxDegreeDischarging"
        lower, sources = generic_lower_bound(g.n_vertices, degree, t), [label]
    if params is not None:
        canon = params.canonical()
        if canon.n_vertices != g.n_vertices:
            raise ContractError(
                f"{canon} has {canon.n_vertices} vertices, graph has {g.n_vertices}"
            )
        if canon.n % canon.k == 0 and canon.n // canon.k >= 3:
            report = bounds_pckk(canon.n // canon.k, canon.k, t)
            if report.lower > lower:
                lower, sources = report.lower, list(report.sources)
    return lower, sources


def certify(
    g: Graph,
    t: int,
    candidate: RainbowAssignment,
    params: PetersenParams | None = None,
) -> Certificate:
    """Exact when the candidate's weight equals the best lower bound, else upper_only."""
    if candidate.t != t:
        raise ContractError(f"candidate uses t={candidate.t}, certificate requested for t={t}")
    require_trdf(g, candidate, "certificate candidate")
    lower, sources = best_lower_bound(g, t, params)
    weight = candidate.weight()
    if weight < lower:
        raise ContractError(
            f"candidate weight {weight} is below the proven lower bound {lower}",
            violations=sources,
        )
    kind = CertificateKind.EXACT if weight == lower else CertificateKind.UPPER_ONLY
    logger.info("certificate %s: weight %d, lower bound %d", kind.value, weight, lower)
    return Certificate(
        kind=kind, weight=weight, lower_bound=lower, gap=weight - lower, sources=sources
    )
