"""Tests for the explicit constructions: extremal pattern, lift, projection, example."""

import pytest

from rainbowforge.constructions import (
    check_pattern_domain,
    default_tripartition,
    example_4rdf,
    extremal_pattern,
    lift,
    rainbow_monotone_projection,
)
from rainbowforge.errors import ContractError, ParameterDomainError
from rainbowforge.graphs.builders import build_generalized_petersen
from rainbowforge.models import Graph, PetersenParams, RainbowAssignment, TriPartition
from rainbowforge.rdf import census, color_classes, restrict_colors, verify_trdf

PATTERN_GRID = [
    (n, k, t)
    for n in (6, 12, 18, 30, 42)
    for k in range(1, n)
    if k % 6 in (1, 5) and 2 * k < n
    for t in (3, 4, 5)
]


class TestExtremalPattern:
    @pytest.mark.parametrize(("n", "k", "t"), PATTERN_GRID)
    def test_valid_with_weight_tn_over_3(self, n: int, k: int, t: int):
        """Every characterized (n, k) carries a tRDF of weight t n / 3."""
        g = build_generalized_petersen(PetersenParams(n=n, k=k))
        a = extremal_pattern(n, k, t)
        assert verify_trdf(g, a).passed
        assert a.weight() == t * n // 3

    def test_layout(self):
        """Outer A-0-B-0-C-0, inner 0-C-0-A-0-B."""
        a = extremal_pattern(6, 1, 3)
        assert a.colors[:6] == tuple(frozenset(s) for s in ({1}, (), {2}, (), {3}, ()))
        assert a.colors[6:] == tuple(frozenset(s) for s in ((), {3}, (), {1}, (), {2}))

    def test_inner_order_a_b_c_fails(self, prism_6: Graph):
        """With the inner cycle read as A, B, C every uncolored vertex misses a color."""
        outer_sets = ({1}, (), {2}, (), {3}, ())
        inner_sets = ((), {1}, (), {2}, (), {3})
        colors = tuple(frozenset(s) for s in outer_sets + inner_sets)
        verdict = verify_trdf(prism_6, RainbowAssignment(t=3, colors=colors))
        assert [v.vertex for v in verdict.violations] == [1, 3, 5, 6, 8, 10]
        assert [v.missing for v in verdict.violations] == [[3], [1], [2], [2], [3], [1]]

    def test_custom_partition(self, prism_6: Graph):
        partition = TriPartition(t=4, a=frozenset({4}), b=frozenset({1, 3}), c=frozenset({2}))
        a = extremal_pattern(6, 1, 4, partition)
        assert a.colors[0] == frozenset({4})
        assert verify_trdf(prism_6, a).passed

    def test_partition_size_mismatch(self):
        with pytest.raises(ParameterDomainError, match="partition is over 3 colors"):
            extremal_pattern(6, 1, 4, default_tripartition(3))

    def test_default_tripartitions(self):
        assert default_tripartition(4).blocks() == (
            frozenset({1, 2}),
            frozenset({3}),
            frozenset({4}),
        )
        with pytest.raises(ParameterDomainError):
            default_tripartition(6)

    @pytest.mark.parametrize(
        ("n", "k", "t", "message"),
        [
            (6, 1, 6, "t in"),
            (7, 1, 3, "n ≡ 0"),
            (12, 2, 3, "k ≡ 1 or 5"),
            (12, 7, 4, "k < n/2"),
        ],
    )
    def test_domain_errors_name_the_failed_condition(
        self, n: int, k: int, t: int, message: str
    ):
        with pytest.raises(ParameterDomainError, match=message):
            check_pattern_domain(n, k, t)


class TestLift:
    def test_lift_pattern(self, prism_6: Graph, pattern_6_1_3: RainbowAssignment):
        """Lifting the 3-pattern on P(6,1) gives an optimal 4RDF of weight 8."""
        lifted = lift(prism_6, pattern_6_1_3)
        assert lifted.t == 4
        assert verify_trdf(prism_6, lifted).passed
        assert lifted.weight() == 8

    def test_cost_at_most_smallest_class(self, example_graph: Graph, example_assignment):
        lifted = lift(example_graph, example_assignment)
        smallest = min(len(cls) for cls in color_classes(example_assignment))
        assert verify_trdf(example_graph, lifted).passed
        assert lifted.weight() <= example_assignment.weight() + smallest

    def test_restriction_recovers_input(self, prism_6: Graph, pattern_6_1_3: RainbowAssignment):
        """Only the new color is added."""
        assert restrict_colors(lift(prism_6, pattern_6_1_3), 3) == pattern_6_1_3

    def test_floor_bound_on_extremal_input(self):
        """From weight w at t colors the lift stays within floor((t+1)/t * w)."""
        for n, k, t in [(6, 1, 3), (12, 1, 4), (12, 5, 3), (18, 5, 4)]:
            g = build_generalized_petersen(PetersenParams(n=n, k=k))
            a = extremal_pattern(n, k, t)
            assert lift(g, a).weight() <= (t + 1) * a.weight() // t

    def test_rejects_non_rdf(self, k4: Graph):
        with pytest.raises(ContractError, match="lift requires"):
            lift(k4, RainbowAssignment.empty(2, 4))


class TestProjection:
    def test_projection_is_valid_and_no_heavier(self, example_graph: Graph, example_assignment):
        projected = rainbow_monotone_projection(example_assignment, 3)
        assert projected.t == 3
        assert verify_trdf(example_graph, projected).passed
        assert projected.weight() <= example_assignment.weight()

    def test_vertex_losing_all_colors_keeps_color_1(self):
        a = RainbowAssignment(t=4, colors=(frozenset({4}), frozenset({2, 4}), frozenset()))
        projected = rainbow_monotone_projection(a, 3)
        assert projected.colors == (frozenset({1}), frozenset({2}), frozenset())

    def test_rejects_more_colors(self, pattern_6_1_3: RainbowAssignment):
        with pytest.raises(ContractError):
            rainbow_monotone_projection(pattern_6_1_3, 4)


class TestExample:
    def test_example_4rdf(self, example_graph: Graph):
        """The example 4RDF verifies with weight 24 = 2|V|/3."""
        a = example_4rdf()
        assert a.t == 4
        assert verify_trdf(example_graph, a).passed
        assert a.weight() == 24
        assert census(a).n(2) == 6
