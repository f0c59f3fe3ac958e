"""Color lifting and projection between rainbow dominating functions with t and t+1 colors."""

import logging

from rainbowforge.errors import ContractError
from rainbowforge.models.assignment import MAX_COLORS, ColorSet, RainbowAssignment
from rainbowforge.models.graph import Graph
from rainbowforge.rdf.transform import color_classes
from rainbowforge.rdf.verify import require_trdf

logger = logging.getLogger(__name__)


def lift(g: Graph, a: RainbowAssignment) -> RainbowAssignment:
    """Turn an l-RDF into an (l+1)-RDF at a cost of at most min_i |U_i|.

    The least used color i* (smallest index on ties) marks the vertices that may receive
    the new color l+1. Each uncolored vertex hands it to its lowest-id neighbor in U_{i*}.
    """
    require_trdf(g, a, "lift")
    if a.t >= MAX_COLORS:
        raise ContractError(f"lift would exceed {MAX_COLORS} colors")
    classes = color_classes(a)
    sizes = [len(cls) for cls in classes]
    pivot = sizes.index(min(sizes)) + 1
    new_color = a.t + 1

    receivers: set[int] = set()
    for v, color_set in enumerate(a.colors):
        if color_set:
            continue
        receivers.add(min(u for u in g.adjacency[v] if pivot in a.colors[u]))
    logger.debug("lift via color %d: %d receivers", pivot, len(receivers))

    colors: list[ColorSet] = [
        color_set | {new_color} if v in receivers else color_set
        for v, color_set in enumerate(a.colors)
    ]
    return RainbowAssignment(t=new_color, colors=tuple(colors))


def rainbow_monotone_projection(a: RainbowAssignment, t: int) -> RainbowAssignment:
    """A t-RDF of no larger weight from a larger-t one.

    Colors above t are dropped; a vertex that loses all its colors keeps {1}.
    """
    if not 1 <= t <= a.t:
        raise ContractError(f"cannot project a {a.t}-coloring onto {t} colors")
    colors: list[ColorSet] = []
    for color_set in a.colors:
        kept = frozenset(c for c in color_set if c <= t)
        colors.append(kept if kept or not color_set else frozenset({1}))
    return RainbowAssignment(t=t, colors=tuple(colors))
