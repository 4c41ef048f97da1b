import random
from fractions import Fraction

import pytest

from cycledensity.geometry import (
    Location,
    Polygon,
    QPoint,
    balanced_partition,
    boundary_bounds,
    densities_to_moments,
    boundary_corner_count,
    extreme_point,
    limit_polygon,
    limit_region_contains,
    moment_region,
    moments_to_densities,
    polygon_Qr,
    qpoint,
    scaled_polygon,
)
from cycledensity.graphs import complete_bipartite, complete_graph, cycle_point

F = Fraction


def test_balanced_partition():
    assert balanced_partition(3, 2) == (1, 2)
    assert balanced_partition(12, 5) == (2, 2, 2, 3, 3)
    assert balanced_partition(5, 5) == (1, 1, 1, 1, 1)
    assert balanced_partition(7, 0) == ()
    for r in range(3, 21):
        for l in range(1, r + 1):
            parts = balanced_partition(r, l)
            assert sum(parts) == r and max(parts) - min(parts) <= 1


def test_extreme_points_cross_checked_by_counting():
    assert extreme_point(3, 1) == (F(1), F(3, 4))
    assert extreme_point(3, 1) == cycle_point(complete_graph(4))
    assert extreme_point(3, 2) == (F(1, 3), F(0))
    assert extreme_point(3, 0) == (F(0), F(3, 2))
    assert extreme_point(3, 0) == cycle_point(complete_bipartite(3, 3))
    assert extreme_point(4, 0) == cycle_point(complete_bipartite(4, 4))
    for r in range(3, 8):
        assert extreme_point(r, r) == (0, 0)
        assert extreme_point(r, 1) == cycle_point(complete_graph(r + 1))
    with pytest.raises(ValueError):
        extreme_point(3, 4)
    with pytest.raises(ValueError):
        extreme_point(2, 1)


def test_polygon_q3_q4():
    assert [tuple(v) for v in polygon_Qr(3).vertices] == [
        (F(0), F(0)),
        (F(1, 3), F(0)),
        (F(1), F(3, 4)),
        (F(0), F(3, 2)),
    ]
    assert [tuple(v) for v in polygon_Qr(4).vertices] == [
        (F(0), F(0)),
        (F(2, 3), F(0)),
        (F(2), F(3)),
        (F(0), F(9, 2)),
    ]


def test_polygon_vertex_counts_and_extreme_membership():
    # The classical corner count ceil(r/2)+2 is exact only up to r=11 (and
    # r=13); from r=12 on, balanced partitions mixing part sizes k and k+1
    # produce collinear boundary points, so the strict hull has fewer
    # corners. All extreme points still lie on the boundary.
    for r in range(3, 21):
        poly = polygon_Qr(r)
        assert len(poly.vertices) == boundary_corner_count(r)
        classical = (r + 1) // 2 + 2
        if r <= 11 or r == 13:
            assert len(poly.vertices) == classical
        else:
            assert len(poly.vertices) < classical
        for l in range(r + 1):
            p = extreme_point(r, l)
            assert poly.contains(p) == Location.BOUNDARY
            if l >= (r + 1) // 2:
                assert p.y == 0


def test_collinear_extreme_points_r12():
    # explicit witness that P5 lies on the segment P6-P4 for r = 12
    p4, p5, p6 = (extreme_point(12, l) for l in (4, 5, 6))
    assert p4 == (4, 3) and p5 == (3, F(3, 2)) and p6 == (2, 0)
    assert (p5.x - p6.x) * (p4.y - p6.y) == (p5.y - p6.y) * (p4.x - p6.x)
    assert p5 not in polygon_Qr(12).vertices


def test_contains_classification():
    q3 = polygon_Qr(3)
    assert q3.contains((F(1, 2), F(3, 4))) == Location.INTERIOR
    assert q3.contains((F(1), F(3, 4))) == Location.BOUNDARY
    assert q3.contains((F(2), F(0))) == Location.OUTSIDE
    assert q3.contains((F(0), F(1))) == Location.BOUNDARY
    assert q3.contains((F(-1, 100), F(1, 2))) == Location.OUTSIDE


def test_boundary_bounds_examples():
    assert boundary_bounds(3, 0) == (F(0), F(3, 2))
    assert boundary_bounds(3, F(1, 3)) == (F(0), F(5, 4))
    assert boundary_bounds(3, 1) == (F(3, 4), F(3, 4))
    with pytest.raises(ValueError):
        boundary_bounds(3, F(11, 10))


def test_contains_consistent_with_boundary_bounds():
    rng = random.Random(71)
    for r in (3, 4, 5, 7):
        poly = polygon_Qr(r)
        xmax = F(r * (r - 1), 6)
        for _ in range(300):
            x = F(rng.randint(0, 60), 60) * xmax
            lo, hi = boundary_bounds(r, x)
            y = F(rng.randint(-10, 70), 50) * (hi if hi else 1)
            inside = lo <= y <= hi
            assert (poly.contains((x, y)) != Location.OUTSIDE) == inside


def test_scaled_polygon_vertex_formula():
    for r in (3, 5, 12):
        sp = scaled_polygon(r)
        target = QPoint(F(r - 1, r), F((r - 1) * (r - 2), r * r))
        assert target in sp.vertices
    assert QPoint(F(2, 3), F(2, 9)) in scaled_polygon(3).vertices


def test_limit_region_membership():
    assert limit_region_contains((F(1, 2), F(1, 4))) == Location.BOUNDARY
    assert limit_region_contains((F(0), F(1))) == Location.BOUNDARY
    assert limit_region_contains((F(1, 2), F(1, 2))) == Location.INTERIOR
    assert limit_region_contains((F(1, 2), F(1, 5))) == Location.OUTSIDE
    assert limit_region_contains((F(2), F(1))) == Location.OUTSIDE
    # exact resolution far beyond any fixed cutoff
    k = 10**6
    on_curve = (F(1, k), F(1, k * k))
    assert limit_region_contains(on_curve) == Location.BOUNDARY
    just_below = (F(1, k), F(1, k * k) - F(1, k**4))
    assert limit_region_contains(just_below) == Location.OUTSIDE
    # midpoint of the chord between curve points k=2 and k=3 is boundary
    mid = (F(5, 12), F(13, 72))
    assert limit_region_contains(mid) == Location.BOUNDARY
    above_mid = (F(5, 12), F(13, 72) + F(1, 1000))
    assert limit_region_contains(above_mid) == Location.INTERIOR


def test_limit_polygon_agrees_with_exact_membership():
    poly = limit_polygon(16)
    rng = random.Random(5)
    for _ in range(300):
        p = (F(rng.randint(0, 40), 40), F(rng.randint(0, 40), 40))
        truncated = poly.contains(p)
        exact = limit_region_contains(p)
        if truncated != Location.OUTSIDE:
            # the truncated hull is a subset of the full region
            assert exact != Location.OUTSIDE
        if p[0] >= F(1, 16) or p[0] == 0:
            # at or right of the last kept curve point the two agree
            assert truncated == exact


def test_moment_dictionary():
    assert densities_to_moments(3, 1, F(3, 4)) == (F(2, 9), F(7, 27))
    assert densities_to_moments(3, 0, 0) == (F(0), F(5, 27))
    assert densities_to_moments(3, 0, F(3, 2)) == (F(0), F(1, 3))
    rng = random.Random(31)
    for _ in range(100):
        r = rng.randint(3, 12)
        d3, d4 = F(rng.randint(0, 99), 7), F(rng.randint(0, 99), 11)
        assert moments_to_densities(r, *densities_to_moments(r, d3, d4)) == (d3, d4)


def test_moment_region_images():
    mr = moment_region(3)
    assert QPoint(F(0), F(5, 27)) in mr.vertices
    assert QPoint(F(2, 9), F(7, 27)) in mr.vertices
    assert QPoint(F(0), F(1, 3)) in mr.vertices


def test_affine_maps_preserve_classification():
    rng = random.Random(41)
    for r in (3, 4, 6):
        q = polygon_Qr(r)
        mr = moment_region(r)
        for _ in range(200):
            p = (F(rng.randint(-5, 40), 17), F(rng.randint(-5, 60), 13))
            img = densities_to_moments(r, *p)
            assert q.contains(p) == mr.contains(img)


def test_polygon_rejects_degenerate_input():
    with pytest.raises(ValueError):
        Polygon([qpoint(0, 0), qpoint(1, 1), qpoint(2, 2)])
