"""Pydantic models for graphs and generalized Petersen parameters."""

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from rainbowforge.errors import ParameterDomainError


class Graph(BaseModel):
    """A simple undirected graph on vertex ids 0 .. n_vertices-1.

    Graphs are immutable once built. Adjacency lists are stored sorted so that two
    graphs with the same edge set compare equal.
    """

    model_config = ConfigDict(frozen=True)

    n_vertices: int = Field(ge=0)
    adjacency: tuple[tuple[int, ...], ...]
    labels: dict[int, str] = Field(default_factory=dict)  # vertex id -> "u3", "v7", ...

    @model_validator(mode="after")
    def check_simple(self) -> Self:
        """Adjacency must be symmetric, loop-free and without duplicate neighbors."""
        if len(self.adjacency) != self.n_vertices:
            raise ValueError(
                f"adjacency has {len(self.adjacency)} rows, expected {self.n_vertices}"
            )
        for v, nbrs in enumerate(self.adjacency):
            if len(set(nbrs)) != len(nbrs):
                raise ValueError(f"vertex {v} has duplicate neighbors")
            for u in nbrs:
                if not 0 <= u < self.n_vertices:
                    raise ValueError(f"vertex {v} has out-of-range neighbor {u}")
                if u == v:
                    raise ValueError(f"vertex {v} has a self-loop")
                if v not in self.adjacency[u]:
                    raise ValueError(f"edge {v}-{u} is not symmetric")
        for v in self.labels:
            if not 0 <= v < self.n_vertices:
                raise ValueError(f"label for unknown vertex {v}")
        return self

    @classmethod
    def from_edges(
        cls, n_vertices: int, edges: list[tuple[int, int]], labels: dict[int, str] | None = None
    ) -> "Graph":
        """Build a graph from an edge list; duplicate edges collapse."""
        nbrs: list[set[int]] = [set() for _ in range(n_vertices)]
        for a, b in edges:
            nbrs[a].add(b)
            nbrs[b].add(a)
        return cls(
            n_vertices=n_vertices,
            adjacency=tuple(tuple(sorted(s)) for s in nbrs),
            labels=labels or {},
        )

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adjacency), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (a, b) with a < b, sorted lexicographically."""
        return [(a, b) for a, nbrs in enumerate(self.adjacency) for b in nbrs if a < b]

    def n_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))


class PetersenParams(BaseModel):
    """Parameters (n, k) of the generalized Petersen graph P(n, k).

    Construction always goes through the canonical form k' = min(k, n - k), since
    P(n, k) and P(n, n - k) are isomorphic.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    k: int

    @model_validator(mode="after")
    def check_domain(self) -> Self:
        if self.n < 3:
            raise ParameterDomainError(f"P(n,k) requires n >= 3, got n={self.n}")
        if not 1 <= self.k <= self.n - 1:
            raise ParameterDomainError(
                f"P(n,k) requires 1 <= k <= n-1, got n={self.n}, k={self.k}"
            )
        if 2 * self.k == self.n:
            raise ParameterDomainError(
                f"P(n,k) requires 2k != n (not cubic otherwise), got n={self.n}, k={self.k}"
            )
        return self

    def canonical(self) -> "PetersenParams":
        return PetersenParams(n=self.n, k=min(self.k, self.n - self.k))

    @property
    def n_vertices(self) -> int:
        return 2 * self.n

    def __str__(self) -> str:
        return f"P({self.n},{self.k})"


class GraphDocument(BaseModel):
    """On-disk JSON form of a graph: sorted edge list plus optional labels."""

    n_vertices: int = Field(ge=0)
    edges: list[tuple[int, int]] = Field(default_factory=list)
    labels: dict[str, str] = Field(default_factory=dict)  # keys are vertex ids as strings
