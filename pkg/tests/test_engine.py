"""Exact game solver against a naive minimax oracle, plus state mechanics.

The solver's windowed search, memo merging, and move oracles all have to
agree with the unpruned recursion in tests/oracles.py; any divergence in
value or in the legality of emitted lines is a real bug, never tolerance.
"""

import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from indidom import families
from indidom.engine import (
    GameState,
    SolveBudgetError,
    SolveLimits,
    Solver,
    apply_round,
    best_indication,
    best_selection,
    game_domination_number,
    initial_state,
    legal_indications,
    selections_for,
    solve_gi,
    value_of,
)
from indidom.graphs import VertexSet, build_graph


def petersen():
    return build_graph(10, oracles.petersen_edges())


class TestGameState:
    def test_initial(self):
        s = initial_state(families.path(3))
        assert s.length == 0 and not s.is_terminal
        assert s.dominated_mask == 0
        assert list(legal_indications(s)) == [0, 1, 2]

    def test_apply_round_accumulates_closed_neighborhoods(self):
        s = initial_state(families.path(4))
        s = apply_round(s, 0, 1)
        assert list(s.dominated) == [0, 1, 2]
        assert s.selections == (1,)
        s = apply_round(s, 3, 3)
        assert s.is_terminal and s.length == 2

    def test_empty_graph_starts_terminal(self):
        assert initial_state(families.empty(0)).is_terminal

    def test_replay_validation(self):
        g = families.path(4)
        with pytest.raises(ValueError, match="out of range"):
            GameState(g, ((4, 0),))
        with pytest.raises(ValueError, match="outside the closed neighborhood"):
            GameState(g, ((0, 2),))
        with pytest.raises(ValueError, match="already dominated"):
            GameState(g, ((0, 1), (2, 2)))
        with pytest.raises(ValueError, match="already over"):
            GameState(g, ((0, 1), (3, 3), (0, 0)))

    def test_selections_for(self):
        s = initial_state(families.path(4))
        assert list(selections_for(s, 1)) == [0, 1, 2]
        with pytest.raises(ValueError):
            selections_for(s, 9)
        s = apply_round(s, 0, 1)
        with pytest.raises(ValueError, match="already dominated"):
            selections_for(s, 1)

    def test_states_hashable_and_frozen(self):
        g = families.path(3)
        a = GameState(g, ((0, 1),))
        b = apply_round(initial_state(g), 0, 1)
        assert a == b and hash(a) == hash(b)


class TestSolverAgainstOracle:
    def test_exhaustive_tiny(self):
        for n in range(1, 5):
            for _, edges in oracles.all_graphs(n):
                assert solve_gi(build_graph(n, edges)).value == oracles.naive_gi(n, edges)

    @pytest.mark.parametrize("block", range(10))
    def test_random_graphs(self, block):
        rng = random.Random(9000 + block)
        for _ in range(20):
            n = rng.randrange(1, 8)
            edges = oracles.random_edges(rng, n, rng.choice((0.15, 0.3, 0.5, 0.8)))
            g = build_graph(n, edges)
            assert solve_gi(g).value == oracles.naive_gi(n, edges), (n, edges)

    def test_midgame_values(self):
        # memo reuse across queries must not corrupt later positions
        g = families.grid(2, 4)
        solver = Solver(g)
        ref_cn = oracles.closed_neighborhoods(g.n, g.edges())
        rng = random.Random(3)
        for _ in range(20):
            picks = [v for v in range(g.n) if rng.random() < 0.4]
            mask = 0
            covered = set()
            for v in picks:
                mask |= g.cn[v]
                covered |= ref_cn[v]
            got = solver.value(mask)
            want = _naive_from(g.n, ref_cn, frozenset(covered))
            assert got == want


def _naive_from(n, cn, dominated):
    everything = frozenset(range(n))
    seen = {}

    def value(dom):
        if dom == everything:
            return 0
        if dom not in seen:
            seen[dom] = min(
                max(1 + value(dom | cn[v]) for v in cn[u])
                for u in everything - dom
            )
        return seen[dom]

    return value(frozenset(dominated))


class TestKnownValues:
    # all pinned after computing them with both this engine and the oracle
    @pytest.mark.parametrize("n,want", [(1, 1), (2, 1), (3, 2), (7, 4), (10, 5)])
    def test_paths(self, n, want):
        assert solve_gi(families.path(n)).value == want

    def test_named(self):
        assert solve_gi(petersen()).value == 5
        assert solve_gi(families.hypercube(3)).value == 4
        assert solve_gi(families.star(5)).value == 5
        assert solve_gi(families.grid(3, 3)).value == 5

    def test_game_domination(self):
        assert game_domination_number(families.star(5)) == 1
        assert game_domination_number(families.d_chain(1)) == 4

    def test_game_domination_matches_oracle(self):
        rng = random.Random(31)
        for _ in range(25):
            n = rng.randrange(1, 7)
            edges = oracles.random_edges(rng, n, 0.4)
            g = build_graph(n, edges)
            assert game_domination_number(g) == oracles.naive_game_domination(n, edges)

    def test_game_value_staller_turn(self):
        # alternating game with Staller to move, checked against local minimax
        g = families.path(5)
        cn = oracles.closed_neighborhoods(g.n, g.edges())
        everything = frozenset(range(g.n))

        def ref(dom, staller):
            if dom == everything:
                return 0
            opts = [v for v in range(g.n) if not cn[v] <= dom]
            vals = [1 + ref(dom | cn[v], not staller) for v in opts]
            return max(vals) if staller else min(vals)

        solver = Solver(g)
        assert solver.game_value(0, True) == ref(frozenset(), True)
        assert solver.game_value(0, False) == ref(frozenset(), False)


class TestMoveOracles:
    def test_best_indication_prefers_low_vertex(self):
        state = initial_state(families.path(3))
        assert best_indication(state) == (0, 2)

    def test_best_indication_terminal(self):
        state = initial_state(families.empty(0))
        with pytest.raises(ValueError):
            best_indication(state)

    def test_best_selection_maximizes(self):
        state = initial_state(families.path(3))
        # selecting 0 leaves vertex 2 for a second round; selecting 1 ends it
        assert best_selection(state, 0) == (0, 2)

    def test_indication_value_consistency(self):
        g = families.grid(2, 3)
        solver = Solver(g)
        vals = [solver.indication_value(0, u) for u in range(g.n)]
        assert min(vals) == solver.value(0)
        u, v = solver.best_indication(0)
        assert vals[u] == v == min(vals)

    def test_indication_value_validates(self):
        solver = Solver(families.path(3))
        with pytest.raises(ValueError):
            solver.indication_value(0, 5)
        with pytest.raises(ValueError, match="already dominated"):
            solver.indication_value(0b111, 0)

    def test_selection_value_consistency(self):
        g = families.cycle(6)
        solver = Solver(g)
        for u in range(g.n):
            v, val = solver.best_selection(0, u)
            assert g.cn[u] >> v & 1
            assert val == solver.indication_value(0, u)
            assert val == 1 + solver.value(g.cn[v])

    def test_accepts_vertexset_masks(self):
        g = families.path(4)
        solver = Solver(g)
        assert solver.value(VertexSet.of(4, [0, 1, 2])) == 1

    def test_mask_validation(self):
        solver = Solver(families.path(3))
        with pytest.raises(ValueError):
            solver.value(-1)
        with pytest.raises(ValueError):
            solver.value(1 << 5)


class TestPrincipalLine:
    @pytest.mark.parametrize("seed", range(10))
    def test_replays_to_terminal_in_exactly_value_rounds(self, seed):
        rng = random.Random(500 + seed)
        n = rng.randrange(1, 9)
        g = build_graph(n, oracles.random_edges(rng, n, 0.4))
        result = solve_gi(g)
        state = initial_state(g)
        for u, v in result.principal_line:
            state = apply_round(state, u, v)  # raises if illegal
        assert state.is_terminal
        assert state.length == result.value

    def test_line_is_optimal_at_every_prefix(self):
        g = families.grid(2, 3)
        result = solve_gi(g)
        solver = Solver(g)
        state = initial_state(g)
        for u, v in result.principal_line:
            remaining = solver.value(state.dominated_mask)
            assert solver.indication_value(state.dominated_mask, u) == remaining
            state = apply_round(state, u, v)
        assert solver.value(state.dominated_mask) == 0


class TestBoundsAndBudgets:
    def test_known_bounds_tighten(self):
        g = families.grid(2, 3)
        solver = Solver(g)
        lo, hi = solver.known_bounds(0)
        # a priori: at least ceil(undominated / largest closed nbhd), at most
        # one round per undominated vertex
        max_cn = max(row.bit_count() for row in g.cn)
        assert lo == -(-g.n // max_cn) and hi == g.n
        value = solver.value(0)
        assert solver.known_bounds(0) == (value, value)
        assert lo <= value <= hi

    def test_node_budget(self):
        solver = Solver(petersen(), SolveLimits(node_budget=5))
        with pytest.raises(SolveBudgetError):
            solver.value(0)
        lo, hi = solver.known_bounds(0)
        assert 0 <= lo <= hi <= 10
        assert solver.nodes_visited >= 5

    def test_solve_gi_attaches_partial_bounds(self):
        with pytest.raises(SolveBudgetError) as err:
            solve_gi(petersen(), SolveLimits(node_budget=5))
        assert err.value.partial is not None
        lo, hi = err.value.partial
        assert lo <= 5 <= hi

    def test_memo_capacity_is_a_hard_budget(self):
        with pytest.raises(SolveBudgetError, match="memo"):
            solve_gi(petersen(), SolveLimits(memo_capacity=4))

    def test_time_budget(self):
        # the deadline is polled every 1024 nodes, so use a graph big
        # enough to cross that threshold
        g = families.d_chain(2)
        with pytest.raises(SolveBudgetError, match="time"):
            solve_gi(g, SolveLimits(time_budget=1e-9))

    def test_limit_validation(self):
        for bad in (dict(node_budget=0), dict(memo_capacity=0), dict(time_budget=0.0)):
            with pytest.raises(ValueError):
                SolveLimits(**bad)

    def test_budget_spans_queries_on_one_solver(self):
        solver = Solver(families.grid(2, 4), SolveLimits(node_budget=200_000))
        first = solver.nodes_visited
        solver.value(0)
        assert solver.nodes_visited > first
        assert solver.memo_size > 0


class TestStatistics:
    def test_solve_result_reports_progress(self):
        result = solve_gi(families.grid(2, 4))
        assert result.value == 4
        assert result.stats.nodes > 0
        assert result.stats.memo_entries > 0
        assert result.stats.seconds >= 0.0

    def test_value_of_wrapper(self):
        state = apply_round(initial_state(families.path(4)), 0, 1)
        assert value_of(state) == 1


@settings(max_examples=60)
@given(st.integers(1, 6), st.integers(0, 10_000))
def test_value_within_chain_window(n, seed):
    rng = random.Random(seed)
    edges = oracles.random_edges(rng, n, 0.5)
    g = build_graph(n, edges)
    value = solve_gi(g).value
    ref = oracles.brute_invariants(n, edges)
    assert ref["Gamma"] <= value <= oracles.brute_grundy(n, edges)
    assert value <= g.n - g.min_degree()
