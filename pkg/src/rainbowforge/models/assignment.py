"""Pydantic models for rainbow assignments and their derived quantities."""

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

MAX_COLORS = 16  # color sets fit in a 16-bit mask

ColorSet = frozenset[int]


def mask_of(colors: ColorSet) -> int:
    """Bitmask of a color set: color c sets bit c-1."""
    mask = 0
    for c in colors:
        mask |= 1 << (c - 1)
    return mask


def colors_of(mask: int) -> ColorSet:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def full_mask(t: int) -> int:
    return (1 << t) - 1


class RainbowAssignment(BaseModel):
    """An assignment of color sets from {1..t} to the vertices of a graph.

    A candidate until verified against a graph; a certified tRDF afterwards.
    """

    model_config = ConfigDict(frozen=True)

    t: int = Field(ge=1, le=MAX_COLORS)
    colors: tuple[ColorSet, ...]

    @model_validator(mode="after")
    def check_members(self) -> Self:
        for v, color_set in enumerate(self.colors):
            for c in sorted(color_set):
                if not 1 <= c <= self.t:
                    raise ValueError(f"vertex {v} has color {c} outside 1..{self.t}")
        return self

    @field_serializer("colors")
    def serialize_colors(self, colors: tuple[ColorSet, ...]) -> list[list[int]]:
        return [sorted(color_set) for color_set in colors]

    @classmethod
    def from_masks(cls, t: int, masks: list[int] | tuple[int, ...]) -> "RainbowAssignment":
        return cls(t=t, colors=tuple(colors_of(m) for m in masks))

    @classmethod
    def empty(cls, t: int, n_vertices: int) -> "RainbowAssignment":
        return cls(t=t, colors=tuple(frozenset() for _ in range(n_vertices)))

    def masks(self) -> list[int]:
        return [mask_of(color_set) for color_set in self.colors]

    def weight(self) -> int:
        return sum(len(color_set) for color_set in self.colors)

    def __len__(self) -> int:
        return len(self.colors)


class Census(BaseModel):
    """Vertex counts by number of colors, and color-class sizes.

    n_by_size[i] = |V_i|, the number of vertices carrying exactly i colors (i = 0..t);
    u_by_color[i-1] = |U_i|, the number of vertices carrying color i.
    """

    n_by_size: list[int]
    u_by_color: list[int]

    def n(self, i: int) -> int:
        return self.n_by_size[i] if i < len(self.n_by_size) else 0

    def u(self, color: int) -> int:
        return self.u_by_color[color - 1]

    @property
    def weight(self) -> int:
        return sum(i * count for i, count in enumerate(self.n_by_size))


class Violation(BaseModel):
    """An uncolored vertex whose neighborhood misses some colors."""

    vertex: int
    missing: list[int]


class TrdfVerdict(BaseModel):
    """Outcome of checking the rainbow condition; violations are exhaustive."""

    passed: bool
    violations: list[Violation] = Field(default_factory=list)

    def describe(self) -> list[str]:
        return [f"vertex {v.vertex} misses colors {v.missing}" for v in self.violations]


class TriPartition(BaseModel):
    """Three disjoint nonempty color sets covering {1..t}."""

    model_config = ConfigDict(frozen=True)

    t: int = Field(ge=3, le=MAX_COLORS)
    a: ColorSet
    b: ColorSet
    c: ColorSet

    @model_validator(mode="after")
    def check_partition(self) -> Self:
        parts = (self.a, self.b, self.c)
        if any(not part for part in parts):
            raise ValueError("partition blocks must be nonempty")
        if sum(len(part) for part in parts) != len(self.a | self.b | self.c):
            raise ValueError("partition blocks must be pairwise disjoint")
        if self.a | self.b | self.c != frozenset(range(1, self.t + 1)):
            raise ValueError(f"partition blocks must cover colors 1..{self.t}")
        return self

    @field_serializer("a", "b", "c")
    def serialize_block(self, block: ColorSet) -> list[int]:
        return sorted(block)

    def blocks(self) -> tuple[ColorSet, ColorSet, ColorSet]:
        return self.a, self.b, self.c
