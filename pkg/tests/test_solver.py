"""Tests for the exact engines and certificates."""

import pytest

from rainbowforge.catalog import (
    bounds_pckk,
    default_registry,
    generic_lower_bound,
    is_characterized_extremal,
)
from rainbowforge.constructions.lift import lift
from rainbowforge.constructions.patterns import extremal_pattern
from rainbowforge.errors import ContractError, SearchBudgetExceeded, StateSpaceRefused
from rainbowforge.graphs.builders import build_generalized_petersen, build_subdivided_k4
from rainbowforge.models import (
    CertificateKind,
    Graph,
    PetersenParams,
    RainbowAssignment,
    SearchBudget,
    SolveMethod,
)
from rainbowforge.rdf.transform import color_classes
from rainbowforge.rdf.verify import verify_trdf
from rainbowforge.solver import (
    BranchAndBound,
    Discharging,
    ProfileDP,
    best_lower_bound,
    branching_order,
    certify,
    column_order,
    construction_seed,
    solve_auto,
    solve_branch_bound,
    solve_profile_dp,
    state_space_estimate,
)
from rainbowforge.solver.branch_bound import symmetric_masks


def prism(n: int) -> Graph:
    return build_generalized_petersen(PetersenParams(n=n, k=1))


def assert_witness(g: Graph, result) -> None:
    assert verify_trdf(g, result.witness).passed
    assert result.witness.weight() == result.optimum


class TestDischarging:
    def test_root_is_generic_bound(self):
        assert Discharging(3, 3).root(12) == 6
        assert Discharging(4, 3).root(36) == 24
        assert Discharging(5, 3).root(12) == 10

    def test_root_saturates_at_vertex_count(self):
        assert Discharging(6, 3).root(8) == 8
        assert Discharging(9, 3).root(8) == 8

    def test_isolated_vertices_must_be_colored(self):
        assert Discharging(2, 0).root(5) == 5

    def test_outflow(self):
        charges = Discharging(3, 3)
        assert charges.outflow(0, 3, 0) == 0
        assert charges.outflow(2, 0, 1) == 0
        assert charges.outflow(1, 3, 0) > charges.outflow(1, 1, 2)

    def test_inflow_lowers_residual(self):
        charges = Discharging(3, 3)
        assert charges.residual(6, charges.outflow(3, 3, 0)) < charges.residual(6, 0)
        assert charges.residual(0, 0) == 0


class TestBranchingOrder:
    def test_breadth_first_ties(self, cube: Graph):
        assert branching_order(cube) == [0, 1, 3, 4, 2, 5, 7, 6]

    def test_max_degree_first(self):
        star = Graph.from_edges(4, [(0, 1), (1, 2), (1, 3)])
        assert branching_order(star) == [1, 0, 2, 3]

    def test_covers_every_component(self):
        g = Graph.from_edges(5, [(0, 1), (3, 4)])
        assert sorted(branching_order(g)) == [0, 1, 2, 3, 4]


class TestSymmetricMasks:
    def test_no_color_used(self):
        assert symmetric_masks(3, 0) == (0, 1, 3, 7)

    def test_one_color_used(self):
        assert symmetric_masks(3, 1) == (0, 1, 2, 3, 6, 7)

    def test_all_colors_used(self):
        assert sorted(symmetric_masks(3, 3)) == list(range(8))
        assert symmetric_masks(3, 3)[0] == 0


class TestBranchAndBound:
    def test_cube_domination(self, cube: Graph):
        result = solve_branch_bound(cube, 1)
        assert result.optimum == 2
        assert result.method is SolveMethod.BRANCH_BOUND
        assert_witness(cube, result)

    def test_prism_three_rainbow(self, prism_6: Graph):
        result = solve_branch_bound(prism_6, 3)
        assert result.optimum == 6
        assert result.lower_bound == 6
        assert_witness(prism_6, result)

    def test_k4_two_rainbow(self, k4: Graph):
        result = solve_branch_bound(k4, 2)
        assert result.optimum == 2
        assert_witness(k4, result)

    @pytest.mark.parametrize(("n", "expected"), [(4, 8), (6, 12)])
    def test_many_colors_colors_everything(self, n: int, expected: int):
        result = solve_branch_bound(prism(n), 6)
        assert result.optimum == expected
        assert result.stats.nodes == 0

    def test_domination_of_prisms(self):
        assert solve_branch_bound(prism(8), 1).optimum == 4
        assert solve_branch_bound(prism(6), 1).optimum == 4

    def test_two_rainbow_of_prisms(self):
        assert solve_branch_bound(prism(6), 2).optimum == 6
        assert solve_branch_bound(prism(7), 2).optimum == 7

    def test_isolated_vertices(self):
        g = Graph.from_edges(3, [])
        assert solve_branch_bound(g, 2).optimum == 3

    def test_budget_exhausted(self, example_graph: Graph, small_budget: SearchBudget):
        with pytest.raises(SearchBudgetExceeded) as excinfo:
            solve_branch_bound(example_graph, 4, small_budget)
        assert excinfo.value.incumbent_weight == 36
        assert excinfo.value.lower_bound == 24
        assert excinfo.value.nodes > small_budget.max_nodes
        assert verify_trdf(example_graph, excinfo.value.incumbent).passed

    def test_seed_at_lower_bound_skips_search(
        self, example_graph: Graph, example_assignment: RainbowAssignment, small_budget
    ):
        result = solve_branch_bound(example_graph, 4, small_budget, example_assignment)
        assert result.optimum == 24
        assert result.seeded
        assert result.stats.nodes == 0

    def test_seed_must_match_t(self, prism_6: Graph, pattern_6_1_3: RainbowAssignment):
        with pytest.raises(ContractError, match="seed uses t=3"):
            BranchAndBound(prism_6, 4, initial=pattern_6_1_3)

    def test_seed_must_be_rainbow(self, prism_6: Graph):
        with pytest.raises(ContractError):
            BranchAndBound(prism_6, 3, initial=RainbowAssignment.empty(3, 12))

    def test_color_range(self, prism_6: Graph):
        with pytest.raises(ContractError, match="t must lie"):
            BranchAndBound(prism_6, 0)


class TestProfileDP:
    def test_column_order(self):
        assert column_order(PetersenParams(n=3, k=1)) == [0, 3, 1, 4, 2, 5]

    def test_state_space_estimate(self):
        assert state_space_estimate(PetersenParams(n=6, k=1), 3) == 64 * 16**2
        assert state_space_estimate(PetersenParams(n=8, k=5), 2) == state_space_estimate(
            PetersenParams(n=8, k=3), 2
        )

    @pytest.mark.parametrize(("n", "expected"), [(7, 8), (10, 12), (6, 6)])
    def test_prism_three_rainbow(self, n: int, expected: int):
        result = solve_profile_dp(PetersenParams(n=n, k=1), 3)
        assert result.optimum == expected
        assert result.method is SolveMethod.PROFILE_DP
        assert result.stats.state_estimate == state_space_estimate(PetersenParams(n=n, k=1), 3)
        assert_witness(prism(n), result)

    def test_petersen_graph(self, petersen_graph: Graph):
        dp = solve_profile_dp(PetersenParams(n=5, k=2), 2)
        bb = solve_branch_bound(petersen_graph, 2)
        assert dp.optimum == bb.optimum
        assert_witness(petersen_graph, dp)

    def test_isomorphic_parameters_agree(self):
        assert (
            solve_profile_dp(PetersenParams(n=7, k=5), 2).optimum
            == solve_profile_dp(PetersenParams(n=7, k=2), 2).optimum
        )

    def test_refuses_large_state_space(self):
        with pytest.raises(StateSpaceRefused) as excinfo:
            solve_profile_dp(PetersenParams(n=30, k=5), 5, SearchBudget(max_states=1000))
        assert excinfo.value.estimate == state_space_estimate(PetersenParams(n=30, k=5), 5)

    def test_order_must_be_permutation(self, prism_6: Graph):
        with pytest.raises(ContractError, match="every vertex once"):
            ProfileDP(prism_6, [0, 1, 2], 3)

    def test_seed_at_lower_bound(self, pattern_6_1_3: RainbowAssignment):
        result = solve_profile_dp(PetersenParams(n=6, k=1), 3, initial=pattern_6_1_3)
        assert result.seeded
        assert result.stats.states == 0
        assert result.witness == pattern_6_1_3


class TestEngineAgreement:
    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_prisms(self, n: int, t: int):
        dp = solve_profile_dp(PetersenParams(n=n, k=1), t)
        bb = solve_branch_bound(prism(n), t)
        assert dp.optimum == bb.optimum

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
    def test_prisms_four_rainbow(self, n: int):
        dp = solve_profile_dp(PetersenParams(n=n, k=1), 4)
        bb = solve_branch_bound(prism(n), 4)
        assert dp.optimum == bb.optimum

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [7, 8])
    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_larger_prisms(self, n: int, t: int):
        dp = solve_profile_dp(PetersenParams(n=n, k=1), t)
        bb = solve_branch_bound(prism(n), t)
        assert dp.optimum == bb.optimum == {7: [4, 7, 8], 8: [4, 8, 9]}[n][t - 1]

    @pytest.mark.slow
    @pytest.mark.parametrize(("t", "expected"), [(1, 6), (2, 8)])
    def test_p10_2(self, t: int, expected: int):
        params = PetersenParams(n=10, k=2)
        dp = solve_profile_dp(params, t)
        bb = solve_branch_bound(build_generalized_petersen(params), t)
        assert dp.optimum == bb.optimum == expected

    @pytest.mark.slow
    def test_two_rainbow_p10_2_settles_discrepancy(self):
        """gamma_r2(P(10, 2)) = 8 = 4ck/5, not ck = 10."""
        report = bounds_pckk(5, 2, 2)
        optimum = solve_profile_dp(PetersenParams(n=10, k=2), 2).optimum
        assert optimum == 8
        assert report.alternative_values == [10, 8]
        assert optimum == report.lower
        assert optimum != report.alternative_values[0]

    @pytest.mark.slow
    def test_three_rainbow_p12_2_within_bounds(self):
        result = solve_profile_dp(PetersenParams(n=12, k=2), 3)
        assert bounds_pckk(6, 2, 3).contains(result.optimum)

    @pytest.mark.slow
    def test_unseeded_extremal_prism(self):
        assert solve_profile_dp(PetersenParams(n=6, k=1), 5).optimum == 10


class TestSolveAuto:
    def test_petersen_params_use_profile_dp(self):
        result = solve_auto(PetersenParams(n=7, k=1), 3)
        assert result.method is SolveMethod.PROFILE_DP
        assert result.optimum == 8

    def test_graphs_use_branch_bound(self, k4: Graph):
        result = solve_auto(k4, 2)
        assert result.method is SolveMethod.BRANCH_BOUND
        assert result.optimum == 2

    def test_forced_branch_bound_on_params(self):
        result = solve_auto(PetersenParams(n=6, k=1), 2, method=SolveMethod.BRANCH_BOUND)
        assert result.method is SolveMethod.BRANCH_BOUND
        assert result.optimum == 6

    def test_profile_dp_needs_params(self, prism_6: Graph):
        with pytest.raises(ContractError, match="needs P"):
            solve_auto(prism_6, 3, method=SolveMethod.PROFILE_DP)

    @pytest.mark.parametrize(("t", "expected"), [(3, 6), (4, 8), (5, 10)])
    def test_extremal_prism_is_seeded(self, t: int, expected: int):
        result = solve_auto(PetersenParams(n=6, k=1), t)
        assert result.optimum == expected
        assert result.seeded
        assert_witness(prism(6), result)

    def test_seeded_with_forced_profile_dp(self):
        result = solve_auto(PetersenParams(n=6, k=1), 4, method=SolveMethod.PROFILE_DP)
        assert result.method is SolveMethod.PROFILE_DP
        assert result.optimum == 8

    def test_example_graph_is_seeded(self, example_graph: Graph, small_budget: SearchBudget):
        result = solve_auto(example_graph, 4, small_budget)
        assert result.optimum == 24
        assert result.seeded

    def test_forced_profile_dp_refuses(self):
        with pytest.raises(StateSpaceRefused):
            solve_auto(
                PetersenParams(n=30, k=5),
                5,
                SearchBudget(max_states=1000),
                method=SolveMethod.PROFILE_DP,
            )

    @pytest.mark.parametrize(
        ("n", "k", "t", "expected"), [(12, 5, 3, 12), (18, 5, 4, 24), (30, 5, 5, 50)]
    )
    def test_construction_at_lower_bound_needs_no_search(
        self, n: int, k: int, t: int, expected: int
    ):
        """Oversized DP estimates do not matter once the seed meets the lower bound."""
        params = PetersenParams(n=n, k=k)
        result = solve_auto(params, t, SearchBudget(max_states=1000))
        assert result.optimum == result.lower_bound == expected
        assert result.seeded
        assert result.stats.nodes == result.stats.states == 0
        assert_witness(build_generalized_petersen(params), result)

    @pytest.mark.parametrize(("n", "k"), [(10, 2), (12, 5)])
    def test_six_colors_color_every_vertex(self, n: int, k: int):
        result = solve_auto(PetersenParams(n=n, k=k), 6)
        assert result.optimum == 2 * n
        assert not result.seeded
        assert result.method is SolveMethod.BRANCH_BOUND
        assert result.witness.weight() == 2 * n

    def test_oversized_estimate_falls_back_to_branch_bound(self):
        result = solve_auto(PetersenParams(n=7, k=1), 3, SearchBudget(max_states=10))
        assert result.method is SolveMethod.BRANCH_BOUND
        assert result.optimum == 8

    def test_t_out_of_range(self, k4: Graph):
        with pytest.raises(ContractError, match="t must lie"):
            solve_auto(k4, 17)

    def test_caller_seed_wins(self, pattern_6_1_3: RainbowAssignment):
        result = solve_auto(PetersenParams(n=6, k=1), 3, initial=pattern_6_1_3)
        assert result.witness == pattern_6_1_3


class TestConstructionSeed:
    def test_characterized_params(self):
        seed = construction_seed(PetersenParams(n=12, k=5), 4)
        assert seed is not None
        assert seed.weight() == 16

    def test_uncharacterized_params(self):
        assert construction_seed(PetersenParams(n=12, k=2), 4) is None
        assert construction_seed(PetersenParams(n=6, k=1), 2) is None

    def test_example_graph_only_for_four_colors(self, example_graph: Graph):
        assert construction_seed(example_graph, 4) is not None
        assert construction_seed(example_graph, 3) is None

    def test_other_graphs(self, prism_6: Graph):
        assert construction_seed(prism_6, 4) is None


class TestCertify:
    def test_example_is_exact(self, example_graph: Graph, example_assignment: RainbowAssignment):
        cert = certify(example_graph, 4, example_assignment)
        assert cert.kind is CertificateKind.EXACT
        assert (cert.weight, cert.lower_bound, cert.gap) == (24, 24, 0)
        assert cert.sources == ["LBKuzman"]

    def test_extremal_pattern_is_exact(self, prism_6: Graph):
        cert = certify(prism_6, 5, extremal_pattern(6, 1, 5), PetersenParams(n=6, k=1))
        assert cert.kind is CertificateKind.EXACT
        assert cert.weight == 10

    def test_heavier_function_is_upper_only(self, prism_6: Graph):
        base = extremal_pattern(6, 1, 4)
        v = next(i for i, color_set in enumerate(base.colors) if not color_set)
        colors = list(base.colors)
        colors[v] = frozenset({1})
        heavier = RainbowAssignment(t=4, colors=tuple(colors))
        cert = certify(prism_6, 4, heavier)
        assert cert.kind is CertificateKind.UPPER_ONLY
        assert (cert.weight, cert.lower_bound, cert.gap) == (9, 8, 1)

    def test_rejects_non_rainbow(self, prism_6: Graph):
        with pytest.raises(ContractError, match="certificate candidate"):
            certify(prism_6, 3, RainbowAssignment.empty(3, 12))

    def test_rejects_other_t(self, prism_6: Graph, pattern_6_1_3: RainbowAssignment):
        with pytest.raises(ContractError, match="candidate uses t=3"):
            certify(prism_6, 4, pattern_6_1_3)


class TestBestLowerBound:
    def test_generic(self, prism_6: Graph):
        assert best_lower_bound(prism_6, 3) == (6, ["LBKuzman"])

    def test_family_bound_is_stronger(self):
        params = PetersenParams(n=12, k=2)
        lower, sources = best_lower_bound(build_generalized_petersen(params), 3, params)
        assert lower == 13
        assert "R3Characterization" in sources

    def test_family_needs_k_dividing_n(self, petersen_graph: Graph):
        assert best_lower_bound(petersen_graph, 3, PetersenParams(n=5, k=2))[1] == ["LBKuzman"]

    def test_params_must_match_graph(self, prism_6: Graph):
        with pytest.raises(ContractError, match="vertices"):
            best_lower_bound(prism_6, 3, PetersenParams(n=7, k=1))

    def test_edgeless_graph(self):
        assert best_lower_bound(Graph.from_edges(3, []), 2) == (3, ["TrivialUpperBound"])

    def test_irregular_graph_cites_max_degree_form(self):
        g = build_subdivided_k4()
        lower, sources = best_lower_bound(g, 2)
        assert sources == ["MaxDegreeDischarging"]
        assert lower == generic_lower_bound(g.n_vertices, 3, 2)

    def test_sources_resolve(self, k4: Graph):
        registry = default_registry()
        for g in (k4, build_subdivided_k4(), Graph.from_edges(3, [])):
            for label in best_lower_bound(g, 2)[1]:
                registry.get(label)


class TestLiftConsistency:
    @pytest.mark.parametrize("n", [6, 7, 8])
    def test_lift_bounds_next_optimum(self, n: int):
        """gamma_r(t+1) <= weight of the lifted optimum."""
        g = prism(n)
        optimum = solve_profile_dp(PetersenParams(n=n, k=1), 2)
        lifted = lift(g, optimum.witness)
        assert verify_trdf(g, lifted).passed
        assert solve_profile_dp(PetersenParams(n=n, k=1), 3).optimum <= lifted.weight()

    @pytest.mark.slow
    @pytest.mark.parametrize(
        ("n", "k", "t"),
        [
            (4, 1, 1),
            (8, 1, 1),
            (6, 1, 1),
            (6, 1, 2),
            (7, 1, 2),
            (10, 2, 2),
            (6, 1, 3),
            (7, 1, 3),
            (10, 1, 3),
            (6, 1, 4),
            (6, 1, 5),
            (4, 1, 6),
            (6, 1, 6),
        ],
    )
    def test_lift_of_optimal_witness(self, n: int, k: int, t: int):
        """The lift costs at most the smallest color class, so at most floor(w / t)."""
        params = PetersenParams(n=n, k=k)
        g = build_generalized_petersen(params)
        optimum = solve_auto(params, t)
        lifted = lift(g, optimum.witness)
        smallest = min(len(cls) for cls in color_classes(optimum.witness))
        assert verify_trdf(g, lifted).passed
        assert lifted.t == t + 1
        assert lifted.weight() <= optimum.optimum + smallest
        assert lifted.weight() <= (t + 1) * optimum.optimum // t


class TestLowerBoundSaturation:
    @pytest.mark.slow
    @pytest.mark.parametrize(
        ("n", "k", "saturated"), [(6, 1, True), (12, 1, True), (8, 2, False), (10, 2, False)]
    )
    def test_three_rainbow(self, n: int, k: int, saturated: bool):
        """ceil(t|V|/6) is attained exactly on the characterized instances."""
        params = PetersenParams(n=n, k=k)
        result = solve_profile_dp(params, 3)
        assert is_characterized_extremal(n, k, 3) is saturated
        assert result.optimum >= generic_lower_bound(2 * n, 3, 3)
        assert (result.optimum == generic_lower_bound(2 * n, 3, 3)) is saturated
