"""Exact engine for the indicated domination game.

One round of the game: Dominator points at a vertex that is not yet
dominated, Staller answers with any vertex of its closed neighborhood,
and the answer dominates its own closed neighborhood.  Play ends once
every vertex is dominated.  Dominator wants few rounds, Staller wants
many; the optimal round count from the empty position is the value
reported by solve_gi.

The value function is f(V) = 0 and, for a dominated set S short of V,

    f(S) = min over undominated u of max over v in N[u] of 1 + f(S | N[v]).

Between rounds only the dominated set matters, so the memo is keyed on
that bitmask.  The search is fail-soft alpha-beta over inclusive integer
windows: a call with window [alpha, beta] returns the exact value when
the result lands inside the window, otherwise a valid upper bound (below
alpha) or lower bound (above beta).  Memo entries keep the tightest
known [lo, hi] interval per mask and only tighten, so bounds learned
under one window keep helping later queries on the same solver.

A selection never stalls: the indicated u is undominated and every
v in N[u] has u in N[v], so each round dominates at least one new
vertex.  That gives the admissible bounds used for pruning: with c
undominated vertices left, between ceil(c / (max |N[v]|)) and c rounds
remain.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Union

from .graphs import Graph, VertexSet, iter_bits
from .invariants import ExactBudgetError

_HUGE = 1 << 30

MaskLike = Union[int, VertexSet]


class SolveBudgetError(ExactBudgetError):
    """Search exceeded its node, memo, or time budget.

    partial, when known, holds (lower, upper) bounds established for the
    queried position before the budget ran out.
    """

    def __init__(self, message: str, partial: Optional[tuple[int, int]] = None):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True)
class SolveLimits:
    """Resource caps for one solver instance.

    node_budget counts visited positions across all queries on the same
    solver; time_budget, when set, is per public query, in seconds.
    """

    memo_capacity: int = 1 << 26
    node_budget: int = 1_000_000_000
    time_budget: Optional[float] = None

    def __post_init__(self) -> None:
        if self.memo_capacity <= 0 or self.node_budget <= 0:
            raise ValueError("limits must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("limits must be positive")


@dataclass(frozen=True)
class GameState:
    """One position of the game, as its full history.

    history holds the committed (indicated, selected) pairs in play
    order.  Construction replays the whole history and rejects illegal
    rounds, so every instance is a reachable legal position; the
    dominated set is the union of the selections' closed neighborhoods.
    """

    graph: Graph
    history: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        g = self.graph
        dom = 0
        for idx, (u, v) in enumerate(self.history):
            if not (0 <= u < g.n and 0 <= v < g.n):
                raise ValueError(f"round {idx + 1}: vertex out of range")
            if dom == g.full_mask:
                raise ValueError(f"round {idx + 1}: the game is already over")
            if dom >> u & 1:
                raise ValueError(f"round {idx + 1}: vertex {u} is already dominated")
            if not g.cn[u] >> v & 1:
                raise ValueError(
                    f"round {idx + 1}: {v} is outside the closed neighborhood of {u}"
                )
            dom |= g.cn[v]
        object.__setattr__(self, "_dominated", dom)

    @property
    def dominated_mask(self) -> int:
        return self._dominated  # type: ignore[attr-defined]

    @property
    def dominated(self) -> VertexSet:
        return VertexSet(self.graph.n, self.dominated_mask)

    @property
    def is_terminal(self) -> bool:
        return self.dominated_mask == self.graph.full_mask

    @property
    def length(self) -> int:
        return len(self.history)

    @property
    def selections(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.history)


def initial_state(graph: Graph) -> GameState:
    """The empty position; already terminal when the graph has no vertices."""
    return GameState(graph)


def legal_indications(state: GameState) -> VertexSet:
    """Exactly the undominated vertices."""
    g = state.graph
    return VertexSet(g.n, g.full_mask & ~state.dominated_mask)


def selections_for(state: GameState, u: int) -> VertexSet:
    """Staller's options against the indication u: the closed neighborhood."""
    g = state.graph
    if not 0 <= u < g.n:
        raise ValueError("indicated vertex out of range")
    if state.dominated_mask >> u & 1:
        raise ValueError(f"vertex {u} is already dominated")
    options = g.cn[u]
    # u is undominated, so nothing in N[u] can have been selected before.
    assert not any(v in state.selections for v in iter_bits(options))
    return VertexSet(g.n, options)


def apply_round(state: GameState, u: int, v: int) -> GameState:
    """Commit one round (indication u, selection v); validates legality."""
    return GameState(state.graph, state.history + ((u, v),))


@dataclass(frozen=True)
class SolveStats:
    nodes: int
    memo_entries: int
    seconds: float


@dataclass(frozen=True)
class SolveResult:
    """Value of a full game plus one optimal line and search statistics.

    principal_line replays legally from the empty position, both sides
    following this engine's own move oracles, and ends with everything
    dominated after exactly `value` rounds.
    """

    value: int
    principal_line: tuple[tuple[int, int], ...]
    stats: SolveStats


class Solver:
    """Memoized solver for one graph.

    The transposition table persists across queries, so repeated calls
    on the same instance (an interactive session, a scan of one family
    member) get cheaper as the table fills in.  Instances are not
    thread-safe; distinct instances share nothing.
    """

    def __init__(self, graph: Graph, limits: Optional[SolveLimits] = None):
        self.graph = graph
        self.limits = limits if limits is not None else SolveLimits()
        self._memo: dict[int, tuple[int, int]] = {}
        self._game_memo: dict[int, tuple[int, int]] = {}
        self._nodes = 0
        self._deadline: Optional[float] = None
        self._max_new = max((c.bit_count() for c in graph.cn), default=1)

    @property
    def nodes_visited(self) -> int:
        return self._nodes

    @property
    def memo_size(self) -> int:
        return len(self._memo) + len(self._game_memo)

    def known_bounds(self, dominated: MaskLike) -> tuple[int, int]:
        """Best (lower, upper) bounds currently provable without searching."""
        mask = self._as_mask(dominated)
        und = self.graph.full_mask & ~mask
        return self._bounds(self._memo, mask, und.bit_count())

    def value(self, dominated: MaskLike) -> int:
        """Optimal number of remaining rounds given the dominated set."""
        mask = self._as_mask(dominated)
        self._arm_clock()
        return self._search(mask, 0, self.graph.n)

    def best_indication(self, dominated: MaskLike) -> tuple[int, int]:
        """Dominator's optimal indication and the position's value.

        Ties go to the lowest-numbered vertex.
        """
        mask = self._as_mask(dominated)
        und = self.graph.full_mask & ~mask
        if und == 0:
            raise ValueError("every vertex is already dominated")
        self._arm_clock()
        best_u, best_val = -1, _HUGE
        for u in iter_bits(und):
            val = self._reply_value(mask, u, 0, self.graph.n)
            if val < best_val:
                best_u, best_val = u, val
        return best_u, best_val

    def indication_value(self, dominated: MaskLike, u: int) -> int:
        """Rounds the game takes if Dominator indicates u now, both sides
        optimal afterwards."""
        mask = self._as_mask(dominated)
        if not 0 <= u < self.graph.n:
            raise ValueError("indicated vertex out of range")
        if mask >> u & 1:
            raise ValueError(f"vertex {u} is already dominated")
        self._arm_clock()
        return self._reply_value(mask, u, 0, self.graph.n)

    def best_selection(self, dominated: MaskLike, indicated: int) -> tuple[int, int]:
        """Staller's optimal reply to an indication and the resulting count.

        The count includes the round being completed.  Ties go to the
        lowest-numbered vertex.
        """
        g = self.graph
        mask = self._as_mask(dominated)
        if not 0 <= indicated < g.n:
            raise ValueError("indicated vertex out of range")
        if mask >> indicated & 1:
            raise ValueError(f"vertex {indicated} is already dominated")
        self._arm_clock()
        best_v, best_val = -1, -1
        for v in iter_bits(g.cn[indicated]):
            val = 1 + self._search(mask | g.cn[v], 0, g.n)
            if val > best_val:
                best_v, best_val = v, val
        return best_v, best_val

    def principal_line(self) -> tuple[tuple[int, int], ...]:
        """One optimal game from the empty position, both sides per this engine."""
        g = self.graph
        line = []
        mask = 0
        while mask != g.full_mask:
            u, _ = self.best_indication(mask)
            v, _ = self.best_selection(mask, u)
            line.append((u, v))
            mask |= g.cn[v]
        return tuple(line)

    def game_value(self, dominated: MaskLike = 0, staller_to_move: bool = False) -> int:
        """Remaining length of the alternating-choice domination game.

        Both players pick the dominating vertex themselves, in strict
        turns, and every pick must dominate something new.  Kept beside
        the indicated game for the comparisons between the two.
        """
        mask = self._as_mask(dominated)
        self._arm_clock()
        return self._game_search(mask, staller_to_move, 0, self.graph.n)

    # internal search -----------------------------------------------------

    def _as_mask(self, dominated: MaskLike) -> int:
        if isinstance(dominated, VertexSet):
            if dominated.n != self.graph.n:
                raise ValueError("vertex set is for a different graph order")
            return dominated.mask
        if isinstance(dominated, int):
            if not 0 <= dominated <= self.graph.full_mask:
                raise ValueError("dominated mask out of range")
            return dominated
        raise TypeError(f"expected VertexSet or int, got {type(dominated).__name__}")

    def _arm_clock(self) -> None:
        s = self.limits.time_budget
        self._deadline = None if s is None else time.monotonic() + s

    def _tick(self) -> None:
        self._nodes += 1
        if self._nodes > self.limits.node_budget:
            raise SolveBudgetError("node budget exceeded")
        if self._deadline is not None and self._nodes & 1023 == 0:
            if time.monotonic() > self._deadline:
                raise SolveBudgetError("time budget exceeded")

    def _bounds(self, memo: dict[int, tuple[int, int]], key: int, count: int) -> tuple[int, int]:
        lo = -(-count // self._max_new)
        hi = count
        entry = memo.get(key)
        if entry is not None:
            lo = max(lo, entry[0])
            hi = min(hi, entry[1])
        return lo, hi

    def _record(self, memo: dict[int, tuple[int, int]], key: int, lo: int, hi: int,
                a: int, b: int, result: int) -> None:
        if lo <= result <= hi and (a <= result <= b or result == lo or result == hi):
            new = (result, result)
        elif result < a:
            new = (lo, min(hi, result))
        else:
            new = (max(lo, result), hi)
        old = memo.get(key)
        if old is not None:
            new = (max(old[0], new[0]), min(old[1], new[1]))
        elif len(memo) >= self.limits.memo_capacity:
            raise SolveBudgetError("memo capacity exceeded")
        memo[key] = new

    def _search(self, dominated: int, alpha: int, beta: int) -> int:
        g = self.graph
        und = g.full_mask & ~dominated
        if und == 0:
            return 0
        self._tick()
        lo, hi = self._bounds(self._memo, dominated, und.bit_count())
        if lo == hi:
            return lo
        if lo > beta:
            return lo
        if hi < alpha:
            return hi
        a = max(alpha, lo)
        b = min(beta, hi)
        order = sorted(iter_bits(und), key=lambda u: (g.cn[u] & und).bit_count())
        best = _HUGE
        cap = b
        for u in order:
            val = self._reply_value(dominated, u, a, cap)
            if val < best:
                best = val
                if best < a or best == lo:
                    break
                cap = min(cap, best - 1)
        self._record(self._memo, dominated, lo, hi, a, b, best)
        return best

    def _reply_value(self, dominated: int, u: int, alpha: int, beta: int) -> int:
        g = self.graph
        und = g.full_mask & ~dominated
        cap = und.bit_count()
        order = sorted(iter_bits(g.cn[u]), key=lambda v: (g.cn[v] & und).bit_count())
        worst = -1
        for v in order:
            a = max(alpha, worst + 1)
            val = 1 + self._search(dominated | g.cn[v], a - 1, beta - 1)
            if val > worst:
                worst = val
                if worst > beta or worst == cap:
                    break
        return worst

    def _game_search(self, dominated: int, staller: bool, alpha: int, beta: int) -> int:
        g = self.graph
        und = g.full_mask & ~dominated
        if und == 0:
            return 0
        self._tick()
        key = dominated << 1 | staller
        lo, hi = self._bounds(self._game_memo, key, und.bit_count())
        if lo == hi:
            return lo
        if lo > beta:
            return lo
        if hi < alpha:
            return hi
        a = max(alpha, lo)
        b = min(beta, hi)
        moves = [v for v in range(g.n) if g.cn[v] & und]
        moves.sort(key=lambda v: (g.cn[v] & und).bit_count(), reverse=not staller)
        if staller:
            result = -1
            for v in moves:
                aa = max(a, result + 1)
                val = 1 + self._game_search(dominated | g.cn[v], False, aa - 1, b - 1)
                if val > result:
                    result = val
                    if result > b or result == hi:
                        break
        else:
            result = _HUGE
            cap = b
            for v in moves:
                val = 1 + self._game_search(dominated | g.cn[v], True, a - 1, cap - 1)
                if val < result:
                    result = val
                    if result < a or result == lo:
                        break
                    cap = min(cap, result - 1)
        self._record(self._game_memo, key, lo, hi, a, b, result)
        return result


def solve_gi(graph: Graph, limits: Optional[SolveLimits] = None) -> SolveResult:
    """Solve the indicated domination game from the empty position.

    Raises SolveBudgetError, carrying any partial bounds already proved,
    when the limits run out first.
    """
    solver = Solver(graph, limits)
    started = time.perf_counter()
    try:
        value = solver.value(0)
        line = solver.principal_line()
    except SolveBudgetError as err:
        raise SolveBudgetError(str(err), partial=solver.known_bounds(0)) from None
    stats = SolveStats(nodes=solver.nodes_visited, memo_entries=solver.memo_size,
                       seconds=time.perf_counter() - started)
    if len(line) != value:
        raise AssertionError(f"principal line length {len(line)} != value {value}")
    return SolveResult(value=value, principal_line=line, stats=stats)


def value_of(state: GameState, limits: Optional[SolveLimits] = None) -> int:
    """Optimal number of remaining rounds from a position."""
    return Solver(state.graph, limits).value(state.dominated_mask)


def best_indication(state: GameState, limits: Optional[SolveLimits] = None) -> tuple[int, int]:
    """Dominator's optimal indication and the position's value."""
    if state.is_terminal:
        raise ValueError("the game is over")
    return Solver(state.graph, limits).best_indication(state.dominated_mask)


def best_selection(state: GameState, u: int,
                   limits: Optional[SolveLimits] = None) -> tuple[int, int]:
    """Staller's optimal reply to the indication u, with the resulting count."""
    return Solver(state.graph, limits).best_selection(state.dominated_mask, u)


def game_domination_number(graph: Graph, limits: Optional[SolveLimits] = None) -> int:
    """Optimal length of the alternating-choice domination game, Dominator first."""
    return Solver(graph, limits).game_value(0, False)
