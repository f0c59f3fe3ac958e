"""Graph construction, predicates and file formats."""

from rainbowforge.graphs.builders import (
    bipartition,
    build_example_graph,
    build_generalized_petersen,
    build_subdivided_k4,
    girth,
    is_cubic,
    petersen_params,
    to_networkx,
)
from rainbowforge.graphs.io import export_dot, parse_graph, serialize_graph

__all__ = [
    "bipartition",
    "build_example_graph",
    "build_generalized_petersen",
    "build_subdivided_k4",
    "export_dot",
    "girth",
    "is_cubic",
    "parse_graph",
    "petersen_params",
    "serialize_graph",
    "to_networkx",
]
