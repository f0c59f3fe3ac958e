"""Constructors and structural predicates for the graphs under study.

Vertex id convention for P(n, k): the outer vertex u_i has id i and the inner vertex v_i
has id n + i, for 0 <= i < n. Every pattern in `rainbowforge.constructions` indexes
vertices through this convention.
"""

import math
from itertools import combinations

import networkx as nx

from rainbowforge.models.graph import Graph, PetersenParams

# K4 edges in the order their subdivision vertices are numbered (ids 4..9)
K4_EDGES: tuple[tuple[int, int], ...] = tuple(combinations(range(4), 2))
SUBDIVIDED_K4_ORDER = 4 + len(K4_EDGES)


def petersen_params(n: int, k: int) -> PetersenParams:
    """Validated (n, k); raises ParameterDomainError naming the violated constraint."""
    return PetersenParams(n=n, k=k)


def build_generalized_petersen(params: PetersenParams) -> Graph:
    """Build P(n, k) with edges u_i u_{i+1}, u_i v_i and v_i v_{i+k}, indices mod n."""
    canon = params.canonical()
    n, k = canon.n, canon.k
    edges: list[tuple[int, int]] = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    labels = {i: f"u{i}" for i in range(n)} | {n + i: f"v{i}" for i in range(n)}
    return Graph.from_edges(2 * n, edges, labels)


def outer(params: PetersenParams, i: int) -> int:
    return i % params.n


def inner(params: PetersenParams, i: int) -> int:
    return params.n + i % params.n


def build_subdivided_k4() -> Graph:
    """K4 with every edge replaced by a path of length 2.

    Ids 0-3 are the branch vertices, ids 4-9 subdivide the K4 edges in K4_EDGES order;
    labels read "b0".."b3" and "s01".."s23".
    """
    edges: list[tuple[int, int]] = []
    labels = {b: f"b{b}" for b in range(4)}
    for offset, (a, b) in enumerate(K4_EDGES):
        s = 4 + offset
        edges += [(a, s), (s, b)]
        labels[s] = f"s{a}{b}"
    return Graph.from_edges(SUBDIVIDED_K4_ORDER, edges, labels)


def build_example_graph() -> Graph:
    """Three subdivided K4 copies joined through six hub vertices into a cubic graph.

    In every copy the branch vertices are meant to carry colors 1, 2, 3, 4. The hub for
    the color pair S is joined, in each copy, to the vertex subdividing the K4 edge whose
    branch vertices carry the two colors outside S. Labels record the intended colors:
    "c<copy>.b<color>" for branch vertices, "c<copy>.s<a><b>" for the vertex between the
    branch vertices colored a and b, and "h<a><b>" for the hub carrying {a, b}.
    Copies occupy ids 0-9, 10-19, 20-29; hubs take ids 30-35.
    """
    base = build_subdivided_k4()
    edges: list[tuple[int, int]] = []
    labels: dict[int, str] = {}
    subdivision_of: dict[tuple[int, frozenset[int]], int] = {}
    for copy in range(3):
        offset = copy * SUBDIVIDED_K4_ORDER
        edges += [(offset + a, offset + b) for a, b in base.edges()]
        for b in range(4):
            labels[offset + b] = f"c{copy}.b{b + 1}"
        for pos, (a, b) in enumerate(K4_EDGES):
            s = offset + 4 + pos
            labels[s] = f"c{copy}.s{a + 1}{b + 1}"
            subdivision_of[(copy, frozenset({a + 1, b + 1}))] = s

    hub_id = 3 * SUBDIVIDED_K4_ORDER
    all_colors = frozenset(range(1, 5))
    for pair in combinations(range(1, 5), 2):
        labels[hub_id] = f"h{pair[0]}{pair[1]}"
        complement = all_colors - frozenset(pair)
        for copy in range(3):
            edges.append((hub_id, subdivision_of[(copy, complement)]))
        hub_id += 1
    return Graph.from_edges(hub_id, edges, labels)


def is_cubic(g: Graph) -> bool:
    return all(len(nbrs) == 3 for nbrs in g.adjacency)


def to_networkx(g: Graph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n_vertices))
    nxg.add_edges_from(g.edges())
    return nxg


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A 2-coloring of g as (part 0, part 1), or None when g has an odd cycle.

    Components are colored independently; the lowest id of each component lands in part 0.
    """
    nxg = to_networkx(g)
    if not nx.is_bipartite(nxg):
        return None
    coloring = nx.bipartite.color(nxg)
    part0: set[int] = set()
    part1: set[int] = set()
    for component in nx.connected_components(nxg):
        flip = coloring[min(component)]
        for v in component:
            (part0 if coloring[v] == flip else part1).add(v)
    return frozenset(part0), frozenset(part1)


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, None for forests."""
    value = nx.girth(to_networkx(g))
    return None if math.isinf(value) else int(value)
