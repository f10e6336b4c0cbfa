"""Named graph families and seeded random instances.

Vertex numbering is fixed and documented per family so that witnesses and
transcripts printed by the tools stay meaningful:

* ``path(n)``: vertices 0..n-1 along the path.
* ``cycle(n)``: vertices 0..n-1 around the cycle.
* ``star(n)``: K_{1,n} with center 0 and leaves 1..n.
* ``complete_bipartite(a, b)``: first side 0..a-1, second side a..a+b-1.
* ``complete_multipartite(p1, ..., pk)``: parts are consecutive blocks.
* ``hypercube(d)``: vertex i is the bit string of i; edges flip one bit.
* ``grid(m, n)``: row-major, (row i, col j) is i * n + j.
* ``prism(n)``: K_n x K_2 with (i, side) at 2 * i + side.
* ``prism_minus_edge(n)``: two K_n blocks 0..n-1 and n..2n-1 joined by the
  rungs (i, n + i) for i >= 1; the rung at 0 is the missing edge.
* ``d_chain(c)``: c disjoint copies of the 9-cycle with chords (0,2),
  (3,5), (6,8); copy t occupies 9t..9t+8.
* ``e_cycle(n)``: the cycle on 3n vertices plus chords (3i, 3i+2).
* ``path_power(n, k)``: the k-th power of path(n).
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Mapping

from .graphs import Graph, GraphError, VertexSet, build_graph, cartesian_product, graph_power


class FamilyError(ValueError):
    """Unknown family kind or invalid parameters."""


def empty(n: int) -> Graph:
    if n < 0:
        raise FamilyError("empty needs n >= 0")
    return build_graph(n, [])


def path(n: int) -> Graph:
    if n < 1:
        raise FamilyError("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise FamilyError("complete needs n >= 1")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    if leaves < 1:
        raise FamilyError("star needs at least one leaf")
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise FamilyError("complete_bipartite needs both sides nonempty")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complete_multipartite(*parts: int) -> Graph:
    if len(parts) < 1 or any(p < 1 for p in parts):
        raise FamilyError("complete_multipartite needs nonempty parts")
    bounds = [0]
    for p in parts:
        bounds.append(bounds[-1] + p)
    n = bounds[-1]
    edges = []
    for pi in range(len(parts)):
        for pj in range(pi + 1, len(parts)):
            for u in range(bounds[pi], bounds[pi + 1]):
                for v in range(bounds[pj], bounds[pj + 1]):
                    edges.append((u, v))
    return build_graph(n, edges)


def hypercube(d: int) -> Graph:
    if d < 0:
        raise FamilyError("hypercube needs d >= 0")
    n = 1 << d
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)]
    return build_graph(n, edges)


def grid(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise FamilyError("grid needs m, n >= 1")
    return cartesian_product(path(m), path(n))


def prism(n: int) -> Graph:
    if n < 1:
        raise FamilyError("prism needs n >= 1")
    return cartesian_product(complete(n), complete(2))


def prism_minus_edge(n: int) -> Graph:
    """K_n x K_2 minus one rung: two cliques tied by rungs at 1..n-1."""
    if n < 2:
        raise FamilyError("prism_minus_edge needs n >= 2")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges.extend((n + i, n + j) for i in range(n) for j in range(i + 1, n))
    edges.extend((i, n + i) for i in range(1, n))
    return build_graph(2 * n, edges)


def d_chain(copies: int) -> Graph:
    """Disjoint copies of the chorded 9-cycle (chords (0,2), (3,5), (6,8))."""
    if copies < 1:
        raise FamilyError("d_chain needs at least one copy")
    edges = []
    for t in range(copies):
        base = 9 * t
        edges.extend((base + i, base + (i + 1) % 9) for i in range(9))
        edges.extend((base + a, base + b) for a, b in ((0, 2), (3, 5), (6, 8)))
    return build_graph(9 * copies, edges)


def e_cycle(n: int) -> Graph:
    """The cycle on 3n vertices with a chord (3i, 3i+2) in every third."""
    if n < 1:
        raise FamilyError("e_cycle needs n >= 1")
    edges = [(i, (i + 1) % (3 * n)) for i in range(3 * n)]
    edges.extend((3 * i, 3 * i + 2) for i in range(n))
    return build_graph(3 * n, edges)


def path_power(n: int, k: int) -> Graph:
    if k < 1 or n < k:
        raise FamilyError("path_power needs n >= k >= 1")
    return graph_power(path(n), k)


_BUILDERS = {
    "path": (1, path),
    "cycle": (1, cycle),
    "complete": (1, complete),
    "star": (1, star),
    "complete_bipartite": (2, complete_bipartite),
    "complete_multipartite": (None, complete_multipartite),
    "hypercube": (1, hypercube),
    "grid": (2, grid),
    "prism": (1, prism),
    "prism_minus_edge": (1, prism_minus_edge),
    "d_chain": (1, d_chain),
    "e_cycle": (1, e_cycle),
    "path_power": (2, path_power),
}

FAMILY_KINDS = tuple(_BUILDERS)


@dataclass(frozen=True)
class FamilySpec:
    """A family kind plus its integer parameters, e.g. grid(3, 4)."""

    kind: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in _BUILDERS:
            raise FamilyError(f"unknown family kind {self.kind!r}")
        arity, _ = _BUILDERS[self.kind]
        if arity is not None and len(self.params) != arity:
            raise FamilyError(f"{self.kind} takes {arity} parameter(s), got {len(self.params)}")
        if arity is None and not self.params:
            raise FamilyError(f"{self.kind} needs at least one parameter")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse the CLI syntax "kind:p1,p2,...", e.g. "grid:3,4"."""
        kind, sep, rest = text.partition(":")
        kind = kind.strip()
        if not sep or not rest.strip():
            raise FamilyError(f"family spec {text!r} needs kind:params")
        try:
            params = tuple(int(p) for p in rest.split(","))
        except ValueError:
            raise FamilyError(f"family spec {text!r} has non-integer parameters") from None
        return cls(kind, params)

    def __str__(self) -> str:
        return f"{self.kind}:{','.join(map(str, self.params))}"


def generate_family(spec: FamilySpec) -> Graph:
    """Build the graph a FamilySpec names."""
    _, builder = _BUILDERS[spec.kind]
    try:
        return builder(*spec.params)
    except GraphError as exc:
        raise FamilyError(str(exc)) from exc


def random_gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p): one seeded coin flip per vertex pair, pairs in (i, j) order."""
    if n < 0:
        raise FamilyError("gnp needs n >= 0")
    if not 0.0 <= p <= 1.0:
        raise FamilyError("gnp needs 0 <= p <= 1")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree from a seeded Pruefer sequence."""
    if n < 1:
        raise FamilyError("tree needs n >= 1")
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    a = heapq.heappop(leaves)
    b = heapq.heappop(leaves)
    edges.append((a, b))
    return build_graph(n, edges)


def random_split(n: int, seed: int, clique_fraction: float = 0.5) -> tuple[Graph, VertexSet, VertexSet]:
    """A random split graph plus its construction witness (K, I).

    Vertices 0..k-1 form the clique, the rest the independent set.  Cross
    edges fall with probability 1/2; any clique vertex left without a
    neighbor in I gets one, so I is always a maximum independent set.
    """
    if n < 1:
        raise FamilyError("split needs n >= 1")
    if not 0.0 <= clique_fraction <= 1.0:
        raise FamilyError("clique_fraction must lie in [0, 1]")
    if n == 1:
        return build_graph(1, []), VertexSet(1, 0), VertexSet.full(1)
    k = min(max(1, round(clique_fraction * n)), n - 1)
    rng = random.Random(seed)
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for i in range(k):
        for j in range(k, n):
            if rng.random() < 0.5:
                edges.append((i, j))
    g = build_graph(n, edges)
    adj = list(g.adj)
    i_mask = ((1 << n) - 1) ^ ((1 << k) - 1)
    extra = []
    for i in range(k):
        if adj[i] & i_mask == 0:
            extra.append((i, k + rng.randrange(n - k)))
    if extra:
        g = build_graph(n, edges + extra)
    return g, VertexSet(n, (1 << k) - 1), VertexSet(n, i_mask)


def random_instance(kind: str, params: Mapping[str, object], seed: int) -> Graph:
    """Seeded random graph: kind is one of gnp, tree, split.

    params: gnp needs n and p; tree needs n; split needs n and optionally
    clique_fraction.  Identical (kind, params, seed) always rebuild the
    same graph.
    """
    allowed = {"gnp": {"n", "p"}, "tree": {"n"}, "split": {"n", "clique_fraction"}}
    if kind not in allowed:
        raise FamilyError(f"unknown random instance kind {kind!r}")
    opts = dict(params)
    unknown = set(opts) - allowed[kind]
    if unknown:
        raise FamilyError(f"unknown parameters for {kind}: {sorted(unknown)}")
    try:
        if kind == "gnp":
            return random_gnp(int(opts["n"]), float(opts["p"]), seed)
        if kind == "tree":
            return random_tree(int(opts["n"]), seed)
        frac = float(opts.get("clique_fraction", 0.5))
        g, _, _ = random_split(int(opts["n"]), seed, frac)
        return g
    except KeyError as exc:
        raise FamilyError(f"random {kind} instance is missing parameter {exc}") from None
