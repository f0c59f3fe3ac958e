"""Pytest fixtures for RainbowForge tests."""

from pathlib import Path

import pytest

from rainbowforge.constructions.example import example_4rdf
from rainbowforge.constructions.patterns import extremal_pattern
from rainbowforge.graphs.builders import build_example_graph, build_generalized_petersen
from rainbowforge.graphs.io import serialize_graph
from rainbowforge.models import Graph, PetersenParams, RainbowAssignment, SearchBudget
from rainbowforge.rdf.io import serialize_assignment
from rainbowforge.workbench import Workbench


@pytest.fixture
def prism_6() -> Graph:
    """P(6,1), the hexagonal prism."""
    return build_generalized_petersen(PetersenParams(n=6, k=1))


@pytest.fixture
def cube() -> Graph:
    """P(4,1), the 3-cube."""
    return build_generalized_petersen(PetersenParams(n=4, k=1))


@pytest.fixture
def petersen_graph() -> Graph:
    """P(5,2), the Petersen graph."""
    return build_generalized_petersen(PetersenParams(n=5, k=2))


@pytest.fixture
def k4() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def example_graph() -> Graph:
    return build_example_graph()


@pytest.fixture
def example_assignment() -> RainbowAssignment:
    return example_4rdf()


@pytest.fixture
def pattern_6_1_3() -> RainbowAssignment:
    return extremal_pattern(6, 1, 3)


@pytest.fixture
def small_budget() -> SearchBudget:
    return SearchBudget(max_nodes=10, max_states=1000, max_elapsed=60.0)


@pytest.fixture
def workbench() -> Workbench:
    return Workbench(SearchBudget(max_elapsed=120.0))


@pytest.fixture
def write_graph(tmp_path: Path):
    """Write a graph as JSON and return its path."""

    def write(g: Graph, name: str = "graph.json") -> Path:
        path = tmp_path / name
        path.write_text(serialize_graph(g))
        return path

    return write


@pytest.fixture
def write_assignment(tmp_path: Path):
    """Write an assignment as JSON and return its path."""

    def write(a: RainbowAssignment, name: str = "assignment.json") -> Path:
        path = tmp_path / name
        path.write_text(serialize_assignment(a))
        return path

    return write
