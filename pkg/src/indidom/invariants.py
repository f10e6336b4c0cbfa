"""Exact classical invariants: domination, independence, irredundance.

These functions are the cross-checking oracles for the game solver, so
they favor exhaustive correctness over cleverness.  Up to
ENUMERATION_LIMIT vertices every invariant is read off vectorized tables
indexed by all 2**n vertex subsets; beyond that only the independence and
domination numbers fall back to branch and bound, everything else fails
loudly instead of returning an estimate.

Witnesses are canonical: among all optimal sets the one whose sorted
vertex list is lexicographically smallest (enumeration regime only; the
branch-and-bound fallback returns some optimal witness).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .graphs import Graph, VertexSet, iter_bits

ENUMERATION_LIMIT = 20
DEFAULT_NODE_BUDGET = 10_000_000
DEFAULT_MEMO_CAPACITY = 1 << 26


class ExactBudgetError(RuntimeError):
    """Exact value unavailable within the configured budget."""


class IsolatedVertexError(ValueError):
    """Edge covers require a graph without isolated vertices."""


class _Tables:
    """Per-graph subset tables shared by the enumeration-based invariants."""

    def __init__(self, g: Graph):
        n = g.n
        if n > ENUMERATION_LIMIT:
            raise ExactBudgetError(
                f"subset enumeration is limited to n <= {ENUMERATION_LIMIT}, got n={n}"
            )
        size = 1 << n
        self.g = g
        self.n = n
        self.size = size
        self.full = g.full_mask
        self.masks = np.arange(size, dtype=np.int64)
        nm = np.zeros(size, dtype=np.int64)
        pc = np.zeros(size, dtype=np.uint8)
        ind = np.ones(size, dtype=bool)
        for v in range(n):
            lo = 1 << v
            nm[lo : 2 * lo] = nm[:lo] | g.cn[v]
            pc[lo : 2 * lo] = pc[:lo] + 1
            ind[lo : 2 * lo] = ind[:lo] & ((self.masks[:lo] & g.adj[v]) == 0)
        self.nm = nm
        self.pc = pc
        self.ind = ind
        self.dom = nm == self.full
        self._irr: Optional[np.ndarray] = None

    def irredundant(self) -> np.ndarray:
        if self._irr is None:
            irr = np.ones(self.size, dtype=bool)
            for v in range(self.n):
                bit = 1 << v
                withv = (self.masks & bit) != 0
                rest = self.nm[self.masks[withv] ^ bit]
                irr[withv] &= (self.g.cn[v] & ~rest) != 0
            self._irr = irr
        return self._irr

    def pick(self, feasible: np.ndarray, maximize: bool) -> tuple[int, int]:
        """Best size over feasible masks plus the canonical witness mask."""
        if not feasible.any():
            raise ValueError("no feasible subset")
        sizes = self.pc[feasible]
        best = int(sizes.max() if maximize else sizes.min())
        cands = self.masks[feasible]
        cands = cands[self.pc[cands] == best]
        rev = np.zeros(len(cands), dtype=np.int64)
        for i in range(self.n):
            rev |= ((cands >> i) & 1) << (self.n - 1 - i)
        return best, int(cands[np.argmax(rev)])


def _witness(g: Graph, mask: int) -> VertexSet:
    return VertexSet(g.n, mask)


def independence_number(g: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET) -> tuple[int, VertexSet]:
    """Maximum size of an independent set, with witness."""
    if g.n <= ENUMERATION_LIMIT:
        t = _Tables(g)
        best, mask = t.pick(t.ind, maximize=True)
        return best, _witness(g, mask)
    return _mis_branch_bound(g, node_budget)


def domination_number(g: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET) -> tuple[int, VertexSet]:
    """Minimum size of a dominating set, with witness."""
    if g.n <= ENUMERATION_LIMIT:
        t = _Tables(g)
        best, mask = t.pick(t.dom, maximize=False)
        return best, _witness(g, mask)
    return _domination_branch_bound(g, node_budget)


def independent_domination_number(g: Graph) -> tuple[int, VertexSet]:
    """Minimum size of a maximal independent set, with witness."""
    t = _Tables(g)
    best, mask = t.pick(t.ind & t.dom, maximize=False)
    return best, _witness(g, mask)


def upper_domination(g: Graph) -> tuple[int, VertexSet]:
    """Maximum size of a minimal dominating set, with witness."""
    t = _Tables(g)
    feasible = t.dom.copy()
    for v in range(t.n):
        bit = 1 << v
        withv = (t.masks & bit) != 0
        feasible[withv] &= t.nm[t.masks[withv] ^ bit] != t.full
    best, mask = t.pick(feasible, maximize=True)
    return best, _witness(g, mask)


class IrredundanceBounds(NamedTuple):
    ir: int
    IR: int
    ir_witness: VertexSet
    IR_witness: VertexSet


def irredundance_bounds(g: Graph) -> IrredundanceBounds:
    """(ir, IR): extreme sizes of maximal irredundant sets, with witnesses.

    A set is irredundant when every member keeps a private closed neighbor;
    maximality is checked against all single-vertex extensions.  A maximum
    irredundant set is maximal by itself, so IR scans the irredundant table
    directly.
    """
    if g.n == 0:
        empty = VertexSet(0)
        return IrredundanceBounds(0, 0, empty, empty)
    t = _Tables(g)
    irr = t.irredundant()
    maximal = irr.copy()
    for v in range(t.n):
        bit = 1 << v
        without = (t.masks & bit) == 0
        maximal[without] &= ~irr[t.masks[without] | bit]
    lo, lo_mask = t.pick(maximal, maximize=False)
    hi, hi_mask = t.pick(irr, maximize=True)
    return IrredundanceBounds(lo, hi, _witness(g, lo_mask), _witness(g, hi_mask))


def grundy_domination(g: Graph, *, memo_capacity: int = DEFAULT_MEMO_CAPACITY) -> tuple[int, tuple[int, ...]]:
    """Longest dominating closed-neighborhood sequence, with a witness.

    Each chosen vertex must extend the union of closed neighborhoods; the
    sequence ends once that union covers the graph.  Memoized over the
    reachable unions, so the practical size limit is the graph structure
    rather than n itself.
    """
    full = g.full_mask
    cn = g.cn
    memo: dict[int, int] = {}

    def longest(state: int) -> int:
        if state == full:
            return 0
        got = memo.get(state)
        if got is not None:
            return got
        best = 0
        for v in range(g.n):
            nxt = state | cn[v]
            if nxt != state:
                cand = 1 + longest(nxt)
                if cand > best:
                    best = cand
        if len(memo) >= memo_capacity:
            raise ExactBudgetError("grundy domination memo capacity exceeded")
        memo[state] = best
        return best

    total = longest(0)
    seq = []
    state = 0
    while state != full:
        target = memo[state] if state else total
        for v in range(g.n):
            nxt = state | cn[v]
            if nxt != state and 1 + (0 if nxt == full else memo[nxt]) == target:
                seq.append(v)
                state = nxt
                break
    return total, tuple(seq)


@dataclass(frozen=True)
class EdgeCover(object):
    """A smallest edge set covering every vertex."""

    edges: tuple[tuple[int, int], ...]
    size: int

    def __post_init__(self) -> None:
        if len(self.edges) != self.size:
            raise ValueError("edge cover size mismatch")


def min_edge_cover(g: Graph) -> EdgeCover:
    """Minimum edge cover: a maximum matching plus one edge per exposed vertex.

    Bipartite graphs use augmenting-path matching; general graphs fall back
    to an exhaustive alternating-path search (exact, exponential in the
    worst case, capped at n <= 64).  Isolated vertices are an error.
    """
    n = g.n
    if n == 0:
        return EdgeCover((), 0)
    for v in range(n):
        if g.adj[v] == 0:
            raise IsolatedVertexError(f"vertex {v} is isolated, no edge cover exists")
    mate = _max_matching(g)
    cover = {(min(u, v), max(u, v)) for u, v in enumerate(mate) if v >= 0}
    for v in range(n):
        if mate[v] < 0:
            u = next(iter_bits(g.adj[v]))
            cover.add((min(u, v), max(u, v)))
    edges = tuple(sorted(cover))
    return EdgeCover(edges, len(edges))


def _max_matching(g: Graph) -> list[int]:
    from .graphs import bipartition

    sides = bipartition(g)
    if sides is not None:
        return _matching_bipartite(g, sides[0].mask)
    if g.n > 64:
        raise ExactBudgetError("general matching fallback is limited to n <= 64")
    return _matching_general(g)


def _matching_bipartite(g: Graph, a_mask: int) -> list[int]:
    mate = [-1] * g.n
    for u in iter_bits(a_mask):
        seen: set[int] = set()

        def try_augment(x: int) -> bool:
            for w in iter_bits(g.adj[x]):
                if w in seen:
                    continue
                seen.add(w)
                if mate[w] < 0 or try_augment(mate[w]):
                    mate[w] = x
                    mate[x] = w
                    return True
            return False

        try_augment(u)
    return mate


def _matching_general(g: Graph) -> list[int]:
    mate = [-1] * g.n
    for root in range(g.n):
        if mate[root] >= 0:
            continue
        path = {root}

        def grow(x: int) -> bool:
            for w in iter_bits(g.adj[x]):
                if w in path:
                    continue
                if mate[w] < 0:
                    mate[x] = w
                    mate[w] = x
                    return True
                y = mate[w]
                if y in path:
                    continue
                path.add(w)
                path.add(y)
                if grow(y):
                    mate[x] = w
                    mate[w] = x
                    return True
                path.discard(w)
                path.discard(y)
            return False

        grow(root)
    return mate


@dataclass(frozen=True)
class ChainReport:
    """All classical invariants of one graph, with the order checked.

    Entries are None when a budget stopped their computation.  The
    constructor rejects any violation of
    ir <= gamma <= i_dom <= alpha <= Gamma_upper <= IR_upper <= gamma_gr
    over the entries that are present.
    """

    n: int
    ir: Optional[int]
    gamma: Optional[int]
    i_dom: Optional[int]
    alpha: Optional[int]
    Gamma_upper: Optional[int]
    IR_upper: Optional[int]
    gamma_gr: Optional[int]
    ir_witness: Optional[VertexSet] = None
    gamma_witness: Optional[VertexSet] = None
    i_dom_witness: Optional[VertexSet] = None
    alpha_witness: Optional[VertexSet] = None
    Gamma_upper_witness: Optional[VertexSet] = None
    IR_upper_witness: Optional[VertexSet] = None
    gamma_gr_witness: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        chain = [self.ir, self.gamma, self.i_dom, self.alpha,
                 self.Gamma_upper, self.IR_upper, self.gamma_gr]
        present = [x for x in chain if x is not None]
        for a, b in zip(present, present[1:]):
            if a > b:
                raise ValueError(f"invariant chain violated: {chain}")

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "ir": self.ir,
            "gamma": self.gamma,
            "i": self.i_dom,
            "alpha": self.alpha,
            "Gamma": self.Gamma_upper,
            "IR": self.IR_upper,
            "gamma_gr": self.gamma_gr,
        }


def chain_report(g: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET,
                 memo_capacity: int = DEFAULT_MEMO_CAPACITY) -> ChainReport:
    """Compute the whole invariant chain for one graph.

    Budget failures mark the affected entries None instead of aborting the
    report.
    """
    vals: dict[str, Optional[int]] = {}
    wits: dict[str, object] = {}
    try:
        t: Optional[_Tables] = _Tables(g)
    except ExactBudgetError:
        t = None
    if t is not None and g.n > 0:
        a, aw = t.pick(t.ind, maximize=True)
        gmin, gw = t.pick(t.dom, maximize=False)
        idom, iw = t.pick(t.ind & t.dom, maximize=False)
        minimal = t.dom.copy()
        for v in range(t.n):
            bit = 1 << v
            withv = (t.masks & bit) != 0
            minimal[withv] &= t.nm[t.masks[withv] ^ bit] != t.full
        gup, gupw = t.pick(minimal, maximize=True)
        irr = t.irredundant()
        maximal = irr.copy()
        for v in range(t.n):
            bit = 1 << v
            without = (t.masks & bit) == 0
            maximal[without] &= ~irr[t.masks[without] | bit]
        ir, irw = t.pick(maximal, maximize=False)
        irup, irupw = t.pick(irr, maximize=True)
        vals.update(ir=ir, gamma=gmin, i_dom=idom, alpha=a, Gamma_upper=gup, IR_upper=irup)
        wits.update(
            ir_witness=_witness(g, irw),
            gamma_witness=_witness(g, gw),
            i_dom_witness=_witness(g, iw),
            alpha_witness=_witness(g, aw),
            Gamma_upper_witness=_witness(g, gupw),
            IR_upper_witness=_witness(g, irupw),
        )
    elif g.n == 0:
        vals.update(ir=0, gamma=0, i_dom=0, alpha=0, Gamma_upper=0, IR_upper=0)
    else:
        for name, fn in (("alpha", independence_number), ("gamma", domination_number)):
            try:
                val, wit = fn(g, node_budget=node_budget)
                vals[name] = val
                wits[name + "_witness"] = wit
            except ExactBudgetError:
                vals[name] = None
        vals.setdefault("ir", None)
        vals.setdefault("i_dom", None)
        vals.setdefault("Gamma_upper", None)
        vals.setdefault("IR_upper", None)
    try:
        ggr, seq = grundy_domination(g, memo_capacity=memo_capacity)
        vals["gamma_gr"] = ggr
        wits["gamma_gr_witness"] = seq
    except ExactBudgetError:
        vals["gamma_gr"] = None
    return ChainReport(n=g.n, **vals, **wits)  # type: ignore[arg-type]


def _mis_branch_bound(g: Graph, node_budget: int) -> tuple[int, VertexSet]:
    """Exact maximum independent set by branch and bound."""
    best = 0
    best_mask = 0
    nodes = 0

    def rec(cand: int, chosen: int, size: int) -> None:
        nonlocal best, best_mask, nodes
        nodes += 1
        if nodes > node_budget:
            raise ExactBudgetError("independence branch-and-bound node budget exceeded")
        if size + cand.bit_count() <= best and best_mask:
            return
        if cand == 0:
            if size > best or not best_mask:
                best = size
                best_mask = chosen
            return
        rest = cand
        pivot = max(iter_bits(cand), key=lambda v: (g.adj[v] & cand).bit_count())
        rec(cand & ~g.cn[pivot], chosen | (1 << pivot), size + 1)
        rec(rest & ~(1 << pivot), chosen, size)

    rec(g.full_mask, 0, 0)
    return best, VertexSet(g.n, best_mask)


def _domination_branch_bound(g: Graph, node_budget: int) -> tuple[int, VertexSet]:
    """Exact minimum dominating set by branch and bound."""
    best = g.n + 1
    best_mask = 0
    nodes = 0
    cover = g.max_degree() + 1

    def rec(dominated: int, chosen: int, size: int) -> None:
        nonlocal best, best_mask, nodes
        nodes += 1
        if nodes > node_budget:
            raise ExactBudgetError("domination branch-and-bound node budget exceeded")
        und = g.full_mask & ~dominated
        if und == 0:
            if size < best:
                best = size
                best_mask = chosen
            return
        need = -(-und.bit_count() // cover)
        if size + need >= best:
            return
        u = next(iter_bits(und))
        for w in iter_bits(g.cn[u]):
            rec(dominated | g.cn[w], chosen | (1 << w), size + 1)

    rec(0, 0, 0)
    return best, VertexSet(g.n, best_mask)
