"""Vertex coordinates: unit-square bounds, determinism, family shapes."""

import math

from indidom import families
from indidom.families import FamilySpec
from indidom.layout import coordinates


def spread(pts):
    return min(math.dist(a, b) for i, a in enumerate(pts) for b in pts[i + 1:])


class TestBasics:
    def test_counts_and_bounds(self):
        for g, spec in [
            (families.path(7), FamilySpec("path", (7,))),
            (families.grid(3, 4), FamilySpec("grid", (3, 4))),
            (families.random_gnp(9, 0.3, 1), None),
        ]:
            pts = coordinates(g, spec)
            assert len(pts) == g.n
            assert all(0.0 <= x <= 1.0 and 0.0 <= y <= 1.0 for x, y in pts)

    def test_degenerate_sizes(self):
        assert coordinates(families.empty(0)) == []
        assert coordinates(families.empty(1)) == [(0.5, 0.5)]

    def test_vertices_are_distinct(self):
        for g, spec in [
            (families.cycle(8), FamilySpec("cycle", (8,))),
            (families.hypercube(3), FamilySpec("hypercube", (3,))),
            (families.prism(5), FamilySpec("prism", (5,))),
            (families.random_tree(10, 4), None),
        ]:
            assert spread(coordinates(g, spec)) > 1e-3

    def test_deterministic_across_calls(self):
        g = families.random_gnp(11, 0.35, 7)
        assert coordinates(g) == coordinates(g)
        rebuilt = families.random_gnp(11, 0.35, 7)
        assert coordinates(rebuilt) == coordinates(g)


class TestFamilyShapes:
    def test_path_is_nearly_collinear(self):
        pts = coordinates(families.path(9), FamilySpec("path", (9,)))
        xs = [x for x, _ in pts]
        assert xs == sorted(xs)
        assert max(y for _, y in pts) - min(y for _, y in pts) < 0.2

    def test_cycle_lands_on_one_circle(self):
        pts = coordinates(families.cycle(10), FamilySpec("cycle", (10,)))
        cx = sum(x for x, _ in pts) / 10
        cy = sum(y for _, y in pts) / 10
        radii = [math.dist(p, (cx, cy)) for p in pts]
        assert max(radii) - min(radii) < 1e-6

    def test_grid_rows_and_columns(self):
        pts = coordinates(families.grid(3, 4), FamilySpec("grid", (3, 4)))
        for v in range(12):
            same_row = pts[(v // 4) * 4]
            assert pts[v][1] == same_row[1]
        col_x = sorted({x for x, _ in pts})
        assert len(col_x) == 4

    def test_bipartite_columns(self):
        pts = coordinates(families.complete_bipartite(2, 5),
                          FamilySpec("complete_bipartite", (2, 5)))
        assert len({x for x, _ in pts[:2]}) == 1
        assert len({x for x, _ in pts[2:]}) == 1
        assert pts[0][0] != pts[2][0]

    def test_prism_uses_two_radii(self):
        pts = coordinates(families.prism(6), FamilySpec("prism", (6,)))
        cx = sum(x for x, _ in pts) / 12
        cy = sum(y for _, y in pts) / 12
        radii = sorted(round(math.dist(p, (cx, cy)), 4) for p in pts)
        assert len(set(radii)) == 2

    def test_unknown_family_falls_back(self):
        g = families.path(6)
        fallback = coordinates(g)
        shaped = coordinates(g, FamilySpec("path", (6,)))
        assert fallback != shaped
        assert len(fallback) == 6
