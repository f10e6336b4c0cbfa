"""Server-side vertex coordinates so every client draws the same picture.

Families with an obvious shape get it directly: paths and their powers on
a line, cycles and complete graphs on a circle, grids on a lattice,
prisms on two concentric circles, hypercubes as shifted-square
projections, bipartite and multipartite graphs as columns.  Everything
else goes through a small force-directed pass whose RNG is seeded from
the graph's own bytes, so the same graph always lands in the same spot.

Coordinates are normalized to the unit square [0, 1] x [0, 1].
"""

from __future__ import annotations

import math
import random
import zlib
from typing import Optional

from .families import FamilySpec
from .graphs import Graph

Point = tuple[float, float]


def coordinates(g: Graph, family: Optional[FamilySpec] = None) -> list[Point]:
    """One (x, y) per vertex, family-aware when the family is known."""
    if g.n == 0:
        return []
    if g.n == 1:
        return [(0.5, 0.5)]
    pts = _family_points(g, family) if family is not None else None
    if pts is None:
        pts = _force_directed(g)
    return _normalize(pts)


def _family_points(g: Graph, family: FamilySpec) -> Optional[list[Point]]:
    kind, p = family.kind, family.params
    n = g.n
    if kind in ("path", "path_power"):
        return [(float(i), 0.3 * (i % 2)) for i in range(n)]
    if kind in ("cycle", "complete", "e_cycle"):
        return _ring(n)
    if kind == "star":
        return [(0.0, 0.0)] + _ring(n - 1, radius=1.0)
    if kind == "complete_bipartite":
        a = p[0]
        return ([(0.0, float(i)) for i in range(a)]
                + [(1.0, float(j) + (a - (n - a)) / 2.0) for j in range(n - a)])
    if kind == "complete_multipartite":
        pts = []
        tallest = max(p)
        for col, size in enumerate(p):
            pts.extend((float(col), float(row) + (tallest - size) / 2.0)
                       for row in range(size))
        return pts
    if kind == "hypercube":
        d = p[0]
        if d == 0:
            return [(0.5, 0.5)]
        angles = [math.pi * (0.15 + 0.7 * b / max(1, d - 1)) for b in range(d)]
        scale = [1.0 + 0.6 * b for b in range(d)]
        return [(sum((v >> b & 1) * scale[b] * math.cos(angles[b]) for b in range(d)),
                 sum((v >> b & 1) * scale[b] * math.sin(angles[b]) for b in range(d)))
                for v in range(n)]
    if kind == "grid":
        m, cols = p
        return [(float(v % cols), float(v // cols)) for v in range(n)]
    if kind in ("prism", "prism_minus_edge"):
        sides = n // 2
        if kind == "prism":
            inner = _ring(sides, radius=0.55)
            outer = _ring(sides, radius=1.0)
            return [outer[v // 2] if v % 2 == 0 else inner[v // 2] for v in range(n)]
        outer = _ring(sides, radius=1.0)
        inner = _ring(sides, radius=0.55)
        return outer + inner
    if kind == "d_chain":
        pts = []
        for t in range(n // 9):
            ring = _ring(9, radius=1.0)
            pts.extend((x + 2.4 * t, y) for x, y in ring)
        return pts
    return None


def _ring(count: int, radius: float = 1.0) -> list[Point]:
    return [(radius * math.cos(2 * math.pi * i / count - math.pi / 2),
             radius * math.sin(2 * math.pi * i / count - math.pi / 2))
            for i in range(count)]


def _graph_seed(g: Graph) -> int:
    payload = bytes([g.n & 0xFF]) + b"".join(
        a.to_bytes(8, "little") for a in (v for e in g.edges() for v in e))
    return zlib.crc32(payload)


def _force_directed(g: Graph, iterations: int = 250) -> list[Point]:
    """Plain Fruchterman-Reingold with a deterministic seed."""
    n = g.n
    rng = random.Random(_graph_seed(g))
    xs = [rng.uniform(0, 1) for _ in range(n)]
    ys = [rng.uniform(0, 1) for _ in range(n)]
    area_k = math.sqrt(1.0 / n)
    temp = 0.12
    cool = temp / (iterations + 1)
    edges = g.edges()
    for _ in range(iterations):
        dx = [0.0] * n
        dy = [0.0] * n
        for i in range(n):
            for j in range(i + 1, n):
                ex, ey = xs[i] - xs[j], ys[i] - ys[j]
                dist = math.hypot(ex, ey) or 1e-9
                push = area_k * area_k / dist
                fx, fy = ex / dist * push, ey / dist * push
                dx[i] += fx
                dy[i] += fy
                dx[j] -= fx
                dy[j] -= fy
        for a, b in edges:
            ex, ey = xs[a] - xs[b], ys[a] - ys[b]
            dist = math.hypot(ex, ey) or 1e-9
            pull = dist * dist / area_k
            fx, fy = ex / dist * pull, ey / dist * pull
            dx[a] -= fx
            dy[a] -= fy
            dx[b] += fx
            dy[b] += fy
        for i in range(n):
            mag = math.hypot(dx[i], dy[i]) or 1e-9
            step = min(mag, temp)
            xs[i] += dx[i] / mag * step
            ys[i] += dy[i] / mag * step
        temp = max(temp - cool, 0.005)
    return list(zip(xs, ys))


def _normalize(pts: list[Point]) -> list[Point]:
    xs = [x for x, _ in pts]
    ys = [y for _, y in pts]
    span_x = max(xs) - min(xs)
    span_y = max(ys) - min(ys)
    span = max(span_x, span_y) or 1.0
    off_x = (span - span_x) / 2 - min(xs)
    off_y = (span - span_y) / 2 - min(ys)
    return [(round((x + off_x) / span, 6), round((y + off_y) / span, 6))
            for x, y in pts]
