"""The 4-rainbow dominating function accompanying the 36-vertex example graph."""

import re

from rainbowforge.graphs.builders import build_example_graph
from rainbowforge.models.assignment import RainbowAssignment
from rainbowforge.models.graph import Graph

# labels written by build_example_graph: "c0.b3", "c2.s14", "h24"
_BRANCH = re.compile(r"^c\d+\.b(\d)$")
_HUB = re.compile(r"^h(\d)(\d)$")


def colors_from_labels(g: Graph) -> RainbowAssignment:
    colors = []
    for v in range(g.n_vertices):
        label = g.label(v)
        if m := _BRANCH.match(label):
            colors.append(frozenset({int(m.group(1))}))
        elif m := _HUB.match(label):
            colors.append(frozenset({int(m.group(1)), int(m.group(2))}))
        else:
            colors.append(frozenset())
    return RainbowAssignment(t=4, colors=tuple(colors))


def example_4rdf() -> RainbowAssignment:
    """Branch vertices {1}..{4} in every copy, hubs colored by their pair; weight 24."""
    return colors_from_labels(build_example_graph())
