"""Bit-packed simple graphs and vertex sets.

Vertices are the integers ``0..n-1``.  Neighborhoods and vertex sets are
plain Python ints used as bitmasks, so the set algebra the solvers lean on
is exact integer arithmetic.  Graphs are immutable after construction and
safe to share across threads and worker processes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

# Hard cap shared with the graph6 codec; larger size fields are rejected.
MAX_VERTICES = 1 << 18


class GraphError(ValueError):
    """Structurally invalid graph input (bad index, self-loop, oversize)."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lex_less(a: int, b: int) -> bool:
    """Compare equal-size vertex masks as sorted vertex lists.

    Returns True when ``a`` comes lexicographically before ``b``, e.g.
    ``{0, 3}`` before ``{1, 2}``.  Both masks must have the same popcount.
    """
    d = a ^ b
    return bool(d) and bool(a & (d & -d))


@dataclass(frozen=True)
class VertexSet:
    """An immutable subset of ``0..n-1`` backed by a bitmask.

    Iteration enumerates members in ascending order.  All binary operations
    require both operands to live in the same universe.
    """

    n: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.n < 0 or self.n > MAX_VERTICES:
            raise GraphError(f"universe size {self.n} out of range")
        if self.mask < 0 or self.mask >> self.n:
            raise GraphError("mask has bits outside the universe")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise GraphError(f"vertex {v} out of range for n={n}")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def _check(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise GraphError("vertex sets live in different universes")

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool((self.mask >> v) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def add(self, v: int) -> "VertexSet":
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")
        return VertexSet(self.n, self.mask | (1 << v))

    def vertices(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.n}, {{{', '.join(map(str, self))}}})"


class Graph:
    """Immutable simple graph with precomputed closed neighborhoods.

    ``adj[v]`` is the open neighborhood of ``v`` as a bitmask, ``cn[v]``
    the closed one.  Construct through :func:`build_graph` unless you
    already hold adjacency masks.
    """

    __slots__ = ("n", "adj", "cn")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if n < 0 or n > MAX_VERTICES:
            raise GraphError(f"vertex count {n} out of range")
        if len(adj) != n:
            raise GraphError("adjacency length does not match vertex count")
        limit = 1 << n
        for v, row in enumerate(adj):
            if row < 0 or row >= limit:
                raise GraphError(f"adjacency row {v} has out-of-range bits")
            if (row >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")
        for v, row in enumerate(adj):
            for u in iter_bits(row):
                if not (adj[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = adj
        self.cn = tuple(row | (1 << v) for v, row in enumerate(adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            higher = self.adj[v] >> (v + 1)
            for off in iter_bits(higher):
                out.append((v, v + 1 + off))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.adj[v]))

    def neighborhood(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.adj[v])

    def closed_neighborhood(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.cn[v])

    def distances_from(self, source: int) -> list[int]:
        """BFS distances; unreachable vertices get -1."""
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for u in iter_bits(self.adj[v]):
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        return dist

    def component_masks(self) -> list[int]:
        """Connected components as bitmasks, ordered by smallest member."""
        seen = 0
        out = []
        for v in range(self.n):
            if (seen >> v) & 1:
                continue
            comp = 1 << v
            frontier = 1 << v
            while frontier:
                nxt = 0
                for u in iter_bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(comp)
        return out

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return len(self.component_masks()) == 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.edge_count == self.n - 1 and self.is_connected()

    def is_regular(self, k: Optional[int] = None) -> bool:
        degs = set(self.degrees())
        if len(degs) > 1:
            return False
        if k is None:
            return True
        return self.n == 0 or degs == {k}

    def induces_connected(self, mask: int) -> bool:
        """True if the subgraph induced by ``mask`` is connected (or empty)."""
        if mask == 0:
            return True
        low = mask & -mask
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= self.adj[u] & mask
            frontier = nxt & ~comp
            comp |= frontier
        return comp == mask

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph from an edge list.

    Repeated edges collapse silently; self-loops raise :class:`GraphError`.
    """
    if n < 0 or n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} out of range")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def graph_power(g: Graph, k: int) -> Graph:
    """The k-th power: join vertices at BFS distance at most k."""
    if k < 1:
        raise GraphError("power exponent must be at least 1")
    adj = [0] * g.n
    for v in range(g.n):
        dist = g.distances_from(v)
        row = 0
        for u in range(g.n):
            if u != v and 0 <= dist[u] <= k:
                row |= 1 << u
        adj[v] = row
    return Graph(g.n, adj)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (i, j) maps to index i * h.n + j."""
    n = g.n * h.n
    if n > MAX_VERTICES:
        raise GraphError("product too large")
    edges = []
    for i in range(g.n):
        for j in range(h.n):
            base = i * h.n + j
            for j2 in iter_bits(h.adj[j]):
                if j2 > j:
                    edges.append((base, i * h.n + j2))
            for i2 in iter_bits(g.adj[i]):
                if i2 > i:
                    edges.append((base, i2 * h.n + j))
    return build_graph(n, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every cross edge; h's vertices shift by g.n."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise GraphError("join too large")
    edges = list(g.edges())
    edges.extend((g.n + u, g.n + v) for u, v in h.edges())
    edges.extend((u, g.n + w) for u in range(g.n) for w in range(h.n))
    return build_graph(n, edges)


def bipartition(g: Graph) -> Optional[tuple[VertexSet, VertexSet]]:
    """A proper 2-coloring as (side containing 0, rest), or None.

    Component roots are taken in ascending index order and always join the
    first side, so the result is deterministic.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in iter_bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    a = sum(1 << v for v in range(g.n) if color[v] == 0)
    return VertexSet(g.n, a), VertexSet(g.n, g.full_mask & ~a)


def split_partition(g: Graph) -> Optional[tuple[VertexSet, VertexSet]]:
    """Split a graph into a clique K and an independent set I, or None.

    Uses the degree-sequence characterization of split graphs: with degrees
    d_1 >= ... >= d_n and m the largest index with d_m >= m - 1, the graph
    is split exactly when sum(d_1..d_m) == m(m-1) + sum(d_{m+1}..d_n), and
    then the m highest-degree vertices form a clique.  The returned I is a
    maximum independent set: if some clique vertex has no neighbor in I it
    is moved over, which settles the only way I could fall short.
    """
    n = g.n
    if n == 0:
        return VertexSet(0), VertexSet(0)
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    m = 0
    for i in range(n):
        if degs[i] >= i:
            m = i + 1
    if sum(degs[:m]) != m * (m - 1) + sum(degs[m:]):
        return None
    k_mask = 0
    for v in order[:m]:
        k_mask |= 1 << v
    i_mask = g.full_mask & ~k_mask
    for v in iter_bits(k_mask):
        if g.adj[v] & k_mask != k_mask & ~(1 << v):
            return None
    for v in iter_bits(i_mask):
        if g.adj[v] & i_mask:
            return None
    for v in iter_bits(k_mask):
        if g.adj[v] & i_mask == 0:
            k_mask &= ~(1 << v)
            i_mask |= 1 << v
            break
    return VertexSet(n, k_mask), VertexSet(n, i_mask)
