"""Strategy agents realizing the constructive proofs, plus a match arena.

Each agent plays one role using only the public position (the dominated
set and the move history), and guarantees a bound on the game length
against any opponent: the gamma-set Staller forces at least Gamma(G)
rounds, the split / tree / grid Dominators force at most alpha(G) or
ceil(mn/2) rounds, and the path-power pair forces the two closed-form
bounds for P_n^k.  The arena plays any agent against another agent or
against the exact engine, checks every move for legality, and returns
the full transcript.

Agents are deterministic for fixed construction inputs, and they
recompute their bookkeeping from the position itself wherever possible,
so a single instance survives replays of the same game.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .engine import GameState, Solver, SolveLimits, apply_round, initial_state
from .graphs import Graph, VertexSet, iter_bits
from .invariants import independence_number, min_edge_cover, upper_domination
from . import families

DOMINATOR = "dominator"
STALLER = "staller"


class StrategyError(ValueError):
    """Agent construction rejected its inputs."""


class IllegalAgentMove(RuntimeError):
    """An agent emitted a move the rules forbid; names the offender."""

    def __init__(self, agent: "Agent", message: str):
        super().__init__(f"{agent.name} ({agent.role}): {message}")
        self.agent = agent


class Agent:
    """Base contract: a named, single-role move supplier.

    Dominators implement indicate, Stallers implement select; observe is
    called after every completed round so agents can keep or check
    internal accounting.
    """

    role: str = ""
    name: str = "agent"

    def indicate(self, state: GameState) -> int:
        raise NotImplementedError

    def select(self, state: GameState, indicated: int) -> int:
        raise NotImplementedError

    def observe(self, state: GameState) -> None:
        pass


class OptimalAgent(Agent):
    """Plays either role perfectly through a shared exact solver."""

    name = "optimal"

    def __init__(self, role: str, solver: Solver):
        self.role = role
        self._solver = solver

    def indicate(self, state: GameState) -> int:
        return self._solver.best_indication(state.dominated_mask)[0]

    def select(self, state: GameState, indicated: int) -> int:
        return self._solver.best_selection(state.dominated_mask, indicated)[0]


OPTIMAL = "optimal"


class GammaSetStaller(Agent):
    """Staller who only ever selects inside a fixed largest minimal
    dominating set, forcing at least Gamma(G) rounds.

    Every indicated u has an unselected member of N[u] in the set: the
    set dominates u, and a previously selected member would have
    dominated u already.  Since each member keeps a private neighbor
    only it dominates, the game cannot end before the whole set is
    selected.
    """

    role = STALLER
    name = "gamma-set"

    def __init__(self, graph: Graph):
        size, witness = upper_domination(graph)
        self.graph = graph
        self.target_set = witness
        self.target_size = size
        cn = graph.cn
        members = list(witness)
        self._private = {}
        for d in members:
            others = 0
            for e in members:
                if e != d:
                    others |= cn[e]
            self._private[d] = cn[d] & ~others

    def select(self, state: GameState, indicated: int) -> int:
        g = state.graph
        if g != self.graph:
            raise StrategyError("agent was built for a different graph")
        taken = set(state.selections)
        candidates = [d for d in iter_bits(g.cn[indicated] & self.target_set.mask)
                      if d not in taken]
        if not candidates:
            raise AssertionError(
                f"no unselected set member dominates {indicated}; set not dominating?"
            )
        und = g.full_mask & ~state.dominated_mask
        return max(candidates, key=lambda d: ((self._private[d] & und).bit_count(), -d))


class SplitDominator(Agent):
    """Dominator for a split graph: indicate undominated independent-side
    vertices, lowest first, never needing more than alpha(G) rounds.

    Requires the independent side to be a maximum independent set; then
    every clique vertex has a neighbor on that side, so dominating the
    independent side dominates everything.
    """

    role = DOMINATOR
    name = "split"

    def __init__(self, graph: Graph, partition: tuple[VertexSet, VertexSet]):
        clique, independent = partition
        if clique.n != graph.n or independent.n != graph.n:
            raise StrategyError("partition sized for a different graph")
        if clique.mask & independent.mask or (clique.mask | independent.mask) != graph.full_mask:
            raise StrategyError("partition does not split the vertex set")
        for v in independent:
            if graph.adj[v] & independent.mask:
                raise StrategyError("independent side has an internal edge")
        for v in clique:
            if (clique.mask & ~graph.cn[v]) != 0:
                raise StrategyError("clique side is not a clique")
        alpha, _ = independence_number(graph)
        if len(independent) != alpha:
            raise StrategyError("independent side is not a maximum independent set")
        self.graph = graph
        self.independent = independent

    def indicate(self, state: GameState) -> int:
        if state.graph != self.graph:
            raise StrategyError("agent was built for a different graph")
        open_i = self.independent.mask & ~state.dominated_mask
        if open_i == 0:
            raise AssertionError("independent side dominated but the game goes on")
        return next(iter_bits(open_i))


class TreeDominator(Agent):
    """Dominator for a tree, guaranteeing at most alpha(T) rounds.

    Rooted at the lowest-numbered leaf, holding a minimum edge cover F
    (|F| = alpha for a tree): first indicate the root; afterwards take
    the undominated vertex u nearest the root and its F-partner v, and
    indicate u unless v is an undominated child of u, in which case
    indicate v.  Every Staller reply then saturates (fully dominates the
    endpoints of) a new F-edge, which observe() checks, along with the
    proof's claim that the dominated set stays connected except for at
    most one round after Staller dodges into a grandchild.
    """

    role = DOMINATOR
    name = "tree"

    def __init__(self, tree: Graph):
        if tree.n < 2 or not tree.is_tree():
            raise StrategyError("agent needs a tree on at least two vertices")
        self.graph = tree
        self.root = next(v for v in range(tree.n) if tree.degree(v) == 1)
        self.cover = min_edge_cover(tree).edges
        self.depth = tree.distances_from(self.root)
        self._mates = [[] for _ in range(tree.n)]
        for a, b in self.cover:
            self._mates[a].append(b)
            self._mates[b].append(a)
        self._last_round = 0
        self._saturated = 0
        self._broken_rounds = 0

    def indicate(self, state: GameState) -> int:
        g = state.graph
        if g != self.graph:
            raise StrategyError("agent was built for a different graph")
        dom = state.dominated_mask
        und = g.full_mask & ~dom
        if und >> self.root & 1:
            return self.root
        u = min(iter_bits(und), key=lambda w: (self.depth[w], w))
        for v in sorted(self._mates[u]):
            if self.depth[v] < self.depth[u] or dom >> v & 1:
                return u
        return min(v for v in self._mates[u] if self.depth[v] > self.depth[u])

    def observe(self, state: GameState) -> None:
        if state.graph != self.graph:
            return
        dom = state.dominated_mask
        saturated = sum(1 for a, b in self.cover if dom >> a & 1 and dom >> b & 1)
        if state.length == self._last_round + 1:
            if saturated <= self._saturated:
                raise AssertionError(
                    f"round {state.length} saturated no new cover edge "
                    f"({self._saturated} -> {saturated})"
                )
            if state.graph.induces_connected(dom):
                self._broken_rounds = 0
            else:
                self._broken_rounds += 1
                if self._broken_rounds > 1:
                    raise AssertionError(
                        f"dominated set disconnected for {self._broken_rounds} rounds"
                    )
        else:
            self._broken_rounds = 0
        self._last_round = state.length
        self._saturated = saturated


class GridDominator(Agent):
    """Dominator for the row-major grid P_m x P_n, at most ceil(mn/2) rounds.

    Rows are paired into blocks; while some block has a column where
    neither row is dominated, indicate the second-row vertex of the
    first such column.  With both sides odd, row zero is first swept
    left to right in steps of two and mopped up, which costs at most
    ceil(n/2) of the budget.  Remaining undominated vertices are
    indicated one by one.  When m is odd and n even the roles of the two
    axes are swapped so the paired dimension is the even one.
    """

    role = DOMINATOR
    name = "grid"

    def __init__(self, m: int, n: int):
        if m < 1 or n < 1:
            raise StrategyError("grid sides must be at least 1")
        self.m = m
        self.n = n
        self.graph = families.grid(m, n)
        self._swap = m % 2 == 1 and n % 2 == 0
        self.rows, self.cols = (n, m) if self._swap else (m, n)
        self._sweep = self.rows % 2 == 1

    def _vertex(self, a: int, b: int) -> int:
        return b * self.n + a if self._swap else a * self.n + b

    def indicate(self, state: GameState) -> int:
        if state.graph != self.graph:
            raise StrategyError("agent was built for a different grid")
        dom = state.dominated_mask
        if self._sweep:
            row0 = [self._vertex(0, b) for b in range(self.cols)]
            if any(not dom >> w & 1 for w in row0):
                done = [b for b, w in enumerate(row0) if dom >> w & 1]
                if not done:
                    return row0[0]
                frontier = max(done)
                if frontier <= self.cols - 3:
                    return row0[frontier + 2]
                return next(w for w in row0 if not dom >> w & 1)
        first_pair = 1 if self._sweep else 0
        for a in range(first_pair, self.rows - 1, 2):
            for b in range(self.cols):
                lower = self._vertex(a, b)
                upper = self._vertex(a + 1, b)
                if not dom >> lower & 1 and not dom >> upper & 1:
                    return upper
        und = state.graph.full_mask & ~dom
        if und == 0:
            raise AssertionError("asked to indicate in a finished game")
        return next(iter_bits(und))


class PathPowerStaller(Agent):
    """Staller for P_n^k forcing at least (ceil(log2(k+1))+1) * (n // 4k)
    rounds.

    The path is cut into n // 4k sections of 4k vertices.  The first
    indication inside a section is answered with the section's vertex k
    (counted from the end nearer the indication, which fixes the
    section's orientation); afterwards the section's undominated
    vertices form one run, and the reply steps k towards the larger side
    of the run, so each reply dominates at most half of the run's
    protected middle part.  Indications outside every section fall back
    to the exact engine.
    """

    role = STALLER
    name = "pathpower"

    def __init__(self, n: int, k: int, limits: Optional[SolveLimits] = None):
        if k < 2 or n < 4 * k:
            raise StrategyError("needs n >= 4k and k >= 2 for at least one section")
        self.n = n
        self.k = k
        self.graph = families.path_power(n, k)
        self.sections = n // (4 * k)
        self._solver = Solver(self.graph, limits)

    def _section_of(self, vertex: int) -> int:
        s = vertex // (4 * self.k)
        return s if s < self.sections else -1

    def select(self, state: GameState, indicated: int) -> int:
        if state.graph != self.graph:
            raise StrategyError("agent was built for a different path power")
        s = self._section_of(indicated)
        if s < 0:
            return self._solver.best_selection(state.dominated_mask, indicated)[0]
        k = self.k
        base = 4 * k * s
        mirrored = None
        for u, _ in state.history:
            if self._section_of(u) == s:
                mirrored = u - base + 1 > 2 * k
                break
        to_local = (lambda p: 4 * k - (p - base)) if mirrored else (lambda p: p - base + 1)
        to_vertex = (lambda q: base + 4 * k - q) if mirrored else (lambda q: base + q - 1)
        if mirrored is None:
            mirrored = indicated - base + 1 > 2 * k
            return base + 3 * k if mirrored else base + k - 1
        run = sorted(to_local(base + off) for off in range(4 * k)
                     if not state.dominated_mask >> (base + off) & 1)
        if run != list(range(run[0], run[0] + len(run))) or run[0] <= 2 * k:
            raise AssertionError(f"section {s} undominated part is not a proper run: {run}")
        i, j = run[0], run[-1]
        pos = to_local(indicated)
        if pos > 3 * k:
            return to_vertex(4 * k)
        if pos - i < j - pos:
            return to_vertex(pos - k)
        return to_vertex(pos + k)


class PathPowerDominator(Agent):
    """Dominator for P_n^k within the closed-form upper bound.

    Phase one pushes a frontier rightward: while the last vertex is
    undominated and its run of undominated vertices has at least 2k+2
    members, indicate the vertex 2k+1 past the run's start, leaving
    behind gaps of at most 2k+1 vertices.  Phase two halves each
    remaining run by indicating its midpoint: any reply dominates the
    midpoint plus all of one side.
    """

    role = DOMINATOR
    name = "pathpower"

    def __init__(self, n: int, k: int):
        if k < 2 or n < k:
            raise StrategyError("needs n >= k >= 2")
        self.n = n
        self.k = k
        self.graph = families.path_power(n, k)

    def indicate(self, state: GameState) -> int:
        if state.graph != self.graph:
            raise StrategyError("agent was built for a different path power")
        dom = state.dominated_mask
        n, k = self.n, self.k
        if not dom >> (n - 1) & 1:
            start = n - 1
            while start > 0 and not dom >> (start - 1) & 1:
                start -= 1
            if n - start >= 2 * k + 2:
                return start + 2 * k + 1
        i = next(iter_bits(self.graph.full_mask & ~dom))
        j = i
        while j + 1 < n and not dom >> (j + 1) & 1:
            j += 1
        if j - i + 1 > 2 * k + 1:
            raise AssertionError(f"midpoint phase found a run of {j - i + 1} > 2k+1")
        return (i + j) // 2


PlayerSpec = Union[Agent, str]


@dataclass(frozen=True)
class GameRecord:
    """Transcript of one finished match."""

    rounds: tuple[tuple[int, int], ...]
    length: int
    agents: tuple[str, str]

    def to_dict(self) -> dict:
        return {
            "rounds": [list(r) for r in self.rounds],
            "length": self.length,
            "dominator": self.agents[0],
            "staller": self.agents[1],
        }


def _resolve(player: PlayerSpec, role: str, solver: Solver) -> Agent:
    if isinstance(player, str):
        if player != OPTIMAL:
            raise StrategyError(f"unknown player spec {player!r}")
        return OptimalAgent(role, solver)
    if player.role != role:
        raise StrategyError(f"{player.name} plays {player.role}, needed {role}")
    return player


def play_match(graph: Graph, dominator: PlayerSpec, staller: PlayerSpec,
               limits: Optional[SolveLimits] = None) -> GameRecord:
    """Play one full game; either side can be an agent or "optimal".

    Every move is validated; an illegal move raises IllegalAgentMove
    naming the offending agent.
    """
    solver = Solver(graph, limits)
    dom_agent = _resolve(dominator, DOMINATOR, solver)
    sta_agent = _resolve(staller, STALLER, solver)
    state = initial_state(graph)
    while not state.is_terminal:
        u = dom_agent.indicate(state)
        if not (0 <= u < graph.n) or state.dominated_mask >> u & 1:
            raise IllegalAgentMove(dom_agent, f"indicated {u}, which is not undominated")
        v = sta_agent.select(state, u)
        if not (0 <= v < graph.n) or not graph.cn[u] >> v & 1:
            raise IllegalAgentMove(sta_agent, f"selected {v} outside the closed neighborhood of {u}")
        state = apply_round(state, u, v)
        dom_agent.observe(state)
        sta_agent.observe(state)
    return GameRecord(rounds=state.history, length=state.length,
                      agents=(dom_agent.name, sta_agent.name))


def make_staller_gamma(graph: Graph) -> GammaSetStaller:
    """Staller holding a largest minimal dominating set; forces >= Gamma(G)."""
    return GammaSetStaller(graph)


def make_dominator_split(graph: Graph,
                         partition: tuple[VertexSet, VertexSet]) -> SplitDominator:
    """Dominator for a split graph with a maximum independent side; <= alpha(G)."""
    return SplitDominator(graph, partition)


def make_dominator_tree(tree: Graph) -> TreeDominator:
    """Dominator for a tree; forces <= alpha(T) via edge-cover accounting."""
    return TreeDominator(tree)


def make_dominator_grid(m: int, n: int) -> GridDominator:
    """Dominator for the row-major P_m x P_n; forces <= ceil(mn/2)."""
    return GridDominator(m, n)


def make_staller_pathpower(n: int, k: int,
                           limits: Optional[SolveLimits] = None) -> PathPowerStaller:
    """Staller for P_n^k; forces >= (ceil(log2(k+1)) + 1) * (n // 4k)."""
    return PathPowerStaller(n, k, limits)


def make_dominator_pathpower(n: int, k: int) -> PathPowerDominator:
    """Dominator for P_n^k; stays within the closed-form upper bound."""
    return PathPowerDominator(n, k)
