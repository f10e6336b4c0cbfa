"""Strategy agents: guaranteed bounds, legality, and arena mechanics.

Each constructive agent carries a proved guarantee.  The matches here
pit them against the exact engine, so the asserted inequalities are the
guarantees themselves, not statistical luck: an optimal Dominator holds
any Staller to at most gamma_i, an optimal Staller holds any Dominator
to at least gamma_i.
"""

import random

import pytest

import oracles
from indidom import families
from indidom.engine import SolveLimits, Solver, solve_gi
from indidom.graphs import VertexSet, build_graph, split_partition
from indidom.invariants import independence_number, upper_domination
from indidom.strategies import (
    DOMINATOR,
    OPTIMAL,
    STALLER,
    Agent,
    GameRecord,
    IllegalAgentMove,
    OptimalAgent,
    StrategyError,
    make_dominator_grid,
    make_dominator_pathpower,
    make_dominator_split,
    make_dominator_tree,
    make_staller_gamma,
    make_staller_pathpower,
    play_match,
)


class TestArena:
    def test_optimal_vs_optimal_realizes_game_value(self):
        for g in (families.path(7), families.grid(2, 4), families.star(4)):
            record = play_match(g, OPTIMAL, OPTIMAL)
            assert record.length == solve_gi(g).value
            assert record.agents == ("optimal", "optimal")

    def test_record_shape(self):
        g = families.path(3)
        record = play_match(g, OPTIMAL, OPTIMAL)
        assert isinstance(record, GameRecord)
        assert len(record.rounds) == record.length
        d = record.to_dict()
        assert d["length"] == record.length
        assert d["dominator"] == d["staller"] == "optimal"
        assert d["rounds"] == [list(r) for r in record.rounds]

    def test_empty_graph(self):
        record = play_match(families.empty(0), OPTIMAL, OPTIMAL)
        assert record.length == 0 and record.rounds == ()

    def test_unknown_string_spec(self):
        with pytest.raises(StrategyError):
            play_match(families.path(3), "greedy", OPTIMAL)

    def test_role_mismatch(self):
        staller = make_staller_gamma(families.path(4))
        with pytest.raises(StrategyError, match="plays staller"):
            play_match(families.path(4), staller, OPTIMAL)

    def test_illegal_indication_blames_dominator(self):
        class Stuck(Agent):
            role = DOMINATOR
            name = "stuck"

            def indicate(self, state):
                return 0  # eventually already dominated

        with pytest.raises(IllegalAgentMove, match=r"stuck \(dominator\)"):
            play_match(families.path(5), Stuck(), OPTIMAL)

    def test_illegal_selection_blames_staller(self):
        class FarAway(Agent):
            role = STALLER
            name = "far"

            def select(self, state, indicated):
                return (indicated + 2) % state.graph.n

        with pytest.raises(IllegalAgentMove, match=r"far \(staller\)"):
            play_match(families.path(6), OPTIMAL, FarAway())

    def test_out_of_range_selection(self):
        class Wild(Agent):
            role = STALLER
            name = "wild"

            def select(self, state, indicated):
                return 99

        with pytest.raises(IllegalAgentMove, match="selected 99"):
            play_match(families.path(4), OPTIMAL, Wild())

    def test_observe_sees_every_round(self):
        seen = []

        class Watcher(OptimalAgent):
            def observe(self, state):
                seen.append(state.length)

        g = families.path(6)
        solver = Solver(g)
        record = play_match(g, Watcher(DOMINATOR, solver), OPTIMAL)
        assert seen == list(range(1, record.length + 1))

    def test_matches_are_deterministic(self):
        g = families.random_gnp(9, 0.35, 17)
        a = play_match(g, OPTIMAL, make_staller_gamma(g))
        b = play_match(g, OPTIMAL, make_staller_gamma(g))
        assert a == b


class TestGammaStaller:
    @pytest.mark.parametrize("seed", range(20))
    def test_forces_upper_domination_number(self, seed):
        rng = random.Random(60 + seed)
        n = rng.randrange(3, 10)
        g = build_graph(n, oracles.random_edges(rng, n, rng.choice((0.25, 0.5))))
        gamma_up, _ = upper_domination(g)
        record = play_match(g, OPTIMAL, make_staller_gamma(g))
        assert gamma_up <= record.length <= solve_gi(g).value

    def test_named_graphs(self):
        for g in (families.path(7), families.cycle(6), families.prism(4),
                  families.star(5), build_graph(10, oracles.petersen_edges())):
            record = play_match(g, OPTIMAL, make_staller_gamma(g))
            assert record.length >= upper_domination(g)[0]


class TestTreeDominator:
    @pytest.mark.parametrize("seed", range(25))
    def test_holds_alpha_against_optimal_staller(self, seed):
        t = families.random_tree(4 + seed % 10, seed)
        alpha, _ = independence_number(t)
        record = play_match(t, make_dominator_tree(t), OPTIMAL)
        # optimal Staller forces >= gamma_i(T) = alpha(T); the agent's own
        # bound is <= alpha(T), so equality is the only possible outcome
        assert record.length == alpha

    def test_against_gamma_staller(self):
        for seed in range(10):
            t = families.random_tree(11, 100 + seed)
            record = play_match(t, make_dominator_tree(t), make_staller_gamma(t))
            assert record.length <= independence_number(t)[0]

    def test_smallest_tree(self):
        t = families.path(2)
        assert play_match(t, make_dominator_tree(t), OPTIMAL).length == 1

    def test_rejects_non_trees(self):
        with pytest.raises(StrategyError):
            make_dominator_tree(families.cycle(4))
        with pytest.raises(StrategyError):
            make_dominator_tree(build_graph(4, [(0, 1), (2, 3)]))
        with pytest.raises(StrategyError):
            # a lone vertex has no edge cover to account with
            make_dominator_tree(families.path(1))


class TestSplitDominator:
    @pytest.mark.parametrize("seed", range(25))
    def test_holds_alpha_against_optimal_staller(self, seed):
        g, _, _ = families.random_split(5 + seed % 8, 200 + seed)
        partition = split_partition(g)
        alpha, _ = independence_number(g)
        record = play_match(g, make_dominator_split(g, partition), OPTIMAL)
        assert record.length == alpha

    def test_partition_validation(self):
        g = families.path(4)
        ok = split_partition(g)
        make_dominator_split(g, ok)  # sanity: the real partition is accepted
        k4 = VertexSet.of(4, [0, 1])
        with pytest.raises(StrategyError, match="split the vertex set"):
            make_dominator_split(g, (k4, VertexSet.of(4, [1, 3])))
        with pytest.raises(StrategyError, match="split the vertex set"):
            make_dominator_split(g, (VertexSet.of(4, [1]), VertexSet.of(4, [0, 3])))
        with pytest.raises(StrategyError, match="different graph"):
            make_dominator_split(g, (VertexSet.of(5, [1, 2]), VertexSet.of(5, [0, 3, 4])))
        with pytest.raises(StrategyError, match="not a clique"):
            make_dominator_split(g, (VertexSet.of(4, [0, 2]), VertexSet.of(4, [1, 3])))
        with pytest.raises(StrategyError, match="internal edge"):
            make_dominator_split(g, (VertexSet.of(4, [0, 1]), VertexSet.of(4, [2, 3])))

    def test_rejects_non_maximum_independent_side(self):
        # {0,1} is a clique and {2} independent, but alpha(P3) = 2
        g = families.path(3)
        with pytest.raises(StrategyError, match="maximum"):
            make_dominator_split(g, (VertexSet.of(3, [0, 1]), VertexSet.of(3, [2])))


class TestGridDominator:
    @pytest.mark.parametrize("m,n", [(1, 1), (1, 6), (2, 2), (2, 3), (3, 2),
                                     (2, 7), (3, 4), (4, 3), (3, 5), (4, 4), (5, 2)])
    def test_meets_ceiling_exactly(self, m, n):
        g = families.grid(m, n)
        record = play_match(g, make_dominator_grid(m, n), OPTIMAL)
        assert record.length == (m * n + 1) // 2

    def test_against_gamma_staller(self):
        g = families.grid(3, 4)
        record = play_match(g, make_dominator_grid(3, 4), make_staller_gamma(g))
        assert record.length <= 6

    def test_rejects_bad_dimensions(self):
        with pytest.raises(StrategyError):
            make_dominator_grid(0, 3)


class TestPathPowerAgents:
    @pytest.mark.parametrize("n,k", [(8, 2), (12, 2), (16, 2), (17, 2),
                                     (12, 3), (16, 3), (20, 3)])
    def test_staller_reaches_section_bound(self, n, k):
        from indidom.harness import pathpower_bounds

        g = families.path_power(n, k)
        lower, _ = pathpower_bounds(n, k)
        record = play_match(g, OPTIMAL, make_staller_pathpower(n, k))
        assert lower <= record.length <= solve_gi(g).value

    @pytest.mark.parametrize("n,k", [(5, 2), (8, 2), (16, 2), (9, 3), (20, 3)])
    def test_dominator_stays_under_upper_bound(self, n, k):
        from indidom.harness import pathpower_bounds

        g = families.path_power(n, k)
        _, upper = pathpower_bounds(n, k)
        record = play_match(g, make_dominator_pathpower(n, k), OPTIMAL)
        assert solve_gi(g).value <= record.length <= upper

    def test_agents_against_each_other(self):
        from indidom.harness import pathpower_bounds

        n, k = 16, 2
        lower, upper = pathpower_bounds(n, k)
        g = families.path_power(n, k)
        record = play_match(g, make_dominator_pathpower(n, k),
                            make_staller_pathpower(n, k))
        assert lower <= record.length <= upper

    def test_constructor_validation(self):
        with pytest.raises(StrategyError):
            make_staller_pathpower(7, 2)  # needs a full 4k section
        with pytest.raises(StrategyError):
            make_staller_pathpower(20, 1)
        with pytest.raises(StrategyError):
            make_dominator_pathpower(3, 1)
        with pytest.raises(StrategyError):
            make_dominator_pathpower(1, 2)
