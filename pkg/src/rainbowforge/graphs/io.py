"""JSON and DOT formats for graphs.

JSON form: {"n_vertices": N, "edges": [[a, b], ...], "labels": {"0": "u0", ...}} with
a < b in every edge and edges sorted lexicographically. An "adjacency" list of neighbor
lists is accepted on input in place of "edges" and must be symmetric.
"""

import json
from typing import Any

import graphviz
from pydantic import ValidationError

from rainbowforge.errors import FormatError
from rainbowforge.formats import format_error, load_json
from rainbowforge.models.graph import Graph, GraphDocument


def _edges_from_adjacency(n_vertices: int, adjacency: Any) -> list[tuple[int, int]]:
    if not isinstance(adjacency, list) or len(adjacency) != n_vertices:
        raise FormatError(f"adjacency must list {n_vertices} neighbor lists", "adjacency")
    rows: list[set[int]] = []
    for v, row in enumerate(adjacency):
        if not isinstance(row, list) or not all(isinstance(u, int) for u in row):
            raise FormatError("neighbor list must contain integers", f"adjacency.{v}")
        rows.append(set(row))
    edges = []
    for v, row in enumerate(rows):
        for u in sorted(row):
            if not 0 <= u < n_vertices:
                raise FormatError(f"neighbor {u} out of range", f"adjacency.{v}")
            if v not in rows[u]:
                raise FormatError(
                    f"asymmetric entry: {u} lists no {v}", f"adjacency.{v}"
                )
            if v < u:
                edges.append((v, u))
    return edges


def parse_graph(text: str) -> Graph:
    """Parse the JSON graph format; errors carry a line/column or a field path."""
    data = load_json(text)
    if not isinstance(data, dict):
        raise FormatError("graph document must be a JSON object", "line 1, column 1")
    if "adjacency" in data:
        data = dict(data)
        adjacency = data.pop("adjacency")
        n_vertices = data.get("n_vertices")
        if not isinstance(n_vertices, int):
            raise FormatError("n_vertices must be an integer", "n_vertices")
        data["edges"] = _edges_from_adjacency(n_vertices, adjacency)
    try:
        doc = GraphDocument.model_validate(data)
    except ValidationError as e:
        raise format_error(e) from e

    seen: set[tuple[int, int]] = set()
    for idx, (a, b) in enumerate(doc.edges):
        for end, v in enumerate((a, b)):
            if not 0 <= v < doc.n_vertices:
                raise FormatError(f"vertex {v} out of range", f"edges.{idx}.{end}")
        if a == b:
            raise FormatError(f"self-loop on vertex {a}", f"edges.{idx}")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise FormatError(f"duplicate edge {key}", f"edges.{idx}")
        seen.add(key)

    labels: dict[int, str] = {}
    for raw, label in doc.labels.items():
        if not raw.isdigit() or int(raw) >= doc.n_vertices:
            raise FormatError(f"label key {raw!r} is not a vertex id", f"labels.{raw}")
        labels[int(raw)] = label
    return Graph.from_edges(doc.n_vertices, sorted(seen), labels)


def serialize_graph(g: Graph) -> str:
    doc = GraphDocument(
        n_vertices=g.n_vertices,
        edges=g.edges(),
        labels={str(v): g.labels[v] for v in sorted(g.labels)},
    )
    return json.dumps(doc.model_dump(mode="json")) + "\n"


def export_dot(g: Graph, name: str = "G") -> str:
    """Graphviz source for g; node labels come from the graph's label map."""
    dot = graphviz.Graph(name=name)
    dot.attr("node", shape="circle")
    for v in range(g.n_vertices):
        dot.node(str(v), g.label(v))
    for a, b in g.edges():
        dot.edge(str(a), str(b))
    return str(dot.source)
