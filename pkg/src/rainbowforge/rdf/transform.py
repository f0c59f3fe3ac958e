"""Color and vertex relabelings of rainbow assignments."""

from collections.abc import Sequence

from rainbowforge.errors import ContractError
from rainbowforge.models.assignment import ColorSet, RainbowAssignment


def color_classes(a: RainbowAssignment) -> list[frozenset[int]]:
    """U_1 .. U_t: the vertices carrying each color."""
    classes: list[set[int]] = [set() for _ in range(a.t)]
    for v, color_set in enumerate(a.colors):
        for c in color_set:
            classes[c - 1].add(v)
    return [frozenset(cls) for cls in classes]


def permute_colors(a: RainbowAssignment, mapping: dict[int, int]) -> RainbowAssignment:
    """Apply a color permutation given as old color -> new color."""
    if sorted(mapping) != list(range(1, a.t + 1)) or sorted(mapping.values()) != sorted(mapping):
        raise ContractError(f"color mapping is not a permutation of 1..{a.t}")
    colors = tuple(frozenset(mapping[c] for c in color_set) for color_set in a.colors)
    return RainbowAssignment(t=a.t, colors=colors)


def canonical_color_order(a: RainbowAssignment) -> dict[int, int]:
    """The color permutation that makes the assignment lexicographically least.

    Color sets are compared as ascending tuples, vertex by vertex. An ordered partition of
    the colors is refined at each vertex, moving the colors present there ahead of the
    others in their cell; the final cell order numbers the colors 1..t.
    """
    cells: list[list[int]] = [list(range(1, a.t + 1))]
    for color_set in a.colors:
        if not color_set:
            continue
        refined: list[list[int]] = []
        for cell in cells:
            inside = [c for c in cell if c in color_set]
            outside = [c for c in cell if c not in color_set]
            refined += [part for part in (inside, outside) if part]
        cells = refined
        if len(cells) == a.t:
            break
    order = [c for cell in cells for c in cell]
    return {old: new for new, old in enumerate(order, start=1)}


def canonicalize_colors(a: RainbowAssignment) -> RainbowAssignment:
    return permute_colors(a, canonical_color_order(a))


def restrict_colors(a: RainbowAssignment, t: int) -> RainbowAssignment:
    """Drop every color above t."""
    if not 1 <= t <= a.t:
        raise ContractError(f"cannot restrict a {a.t}-coloring to {t} colors")
    colors = tuple(frozenset(c for c in color_set if c <= t) for color_set in a.colors)
    return RainbowAssignment(t=t, colors=colors)


def relabel_vertices(a: RainbowAssignment, permutation: Sequence[int]) -> RainbowAssignment:
    """Move the color set of vertex v to vertex permutation[v]."""
    n = len(a)
    if sorted(permutation) != list(range(n)):
        raise ContractError(f"vertex map is not a permutation of 0..{n - 1}")
    colors: list[ColorSet] = [frozenset()] * n
    for v, color_set in enumerate(a.colors):
        colors[permutation[v]] = color_set
    return RainbowAssignment(t=a.t, colors=tuple(colors))
