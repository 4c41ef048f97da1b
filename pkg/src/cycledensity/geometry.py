"""Exact rational 2-D geometry of the attainable (d3, d4) region.

Everything here is pure ``fractions.Fraction`` arithmetic: the convex
polygon of triangle/square density pairs for r-regular graphs, its
boundary functions, the rescaled large-r limit region, and the affine
image in third/fourth spectral-moment coordinates.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from math import comb
from typing import NamedTuple, Sequence


class QPoint(NamedTuple):
    x: Fraction
    y: Fraction


def qpoint(x, y) -> QPoint:
    return QPoint(Fraction(x), Fraction(y))


class Location(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def _cross(o: QPoint, a: QPoint, b: QPoint) -> Fraction:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def convex_hull(points: Sequence[QPoint]):
    """Monotone-chain hull over exact rationals; collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return list(pts)
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


class Polygon:
    """Strictly convex polygon, counterclockwise vertices, exact queries."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Sequence[QPoint], already_hull: bool = False):
        verts = [QPoint(Fraction(p[0]), Fraction(p[1])) for p in vertices]
        if not already_hull:
            verts = convex_hull(verts)
        if len(verts) < 3:
            raise ValueError("polygon needs at least 3 non-collinear vertices")
        # canonical start: lexicographically smallest vertex
        k = verts.index(min(verts))
        verts = verts[k:] + verts[:k]
        m = len(verts)
        for i in range(m):
            if _cross(verts[i], verts[(i + 1) % m], verts[(i + 2) % m]) <= 0:
                raise ValueError("vertices are not strictly convex counterclockwise")
        self.vertices = tuple(verts)

    def contains(self, p) -> Location:
        """Exact point classification via half-plane cross products."""
        p = QPoint(Fraction(p[0]), Fraction(p[1]))
        verts = self.vertices
        m = len(verts)
        on_edge = False
        for i in range(m):
            c = _cross(verts[i], verts[(i + 1) % m], p)
            if c < 0:
                return Location.OUTSIDE
            if c == 0:
                on_edge = True
        return Location.BOUNDARY if on_edge else Location.INTERIOR

    def affine_image(self, fx, fy) -> "Polygon":
        """Image under (x, y) -> (fx(x), fy(y)) for increasing affine fx, fy."""
        return Polygon([QPoint(fx(p.x), fy(p.y)) for p in self.vertices])

    def __eq__(self, other):
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"Polygon({list(self.vertices)!r})"


# ---------------------------------------------------------------------------
# balanced partitions and the extreme density points


def balanced_partition(r: int, l: int):
    """Partition of r into l parts as equal as possible, non-decreasing.

    l = 0 is the conventional label for the complete bipartite extreme
    graph and returns the empty tuple.
    """
    if l == 0:
        return ()
    if not (1 <= l <= r):
        raise ValueError(f"need 1 <= l <= r, got l={l}, r={r}")
    return tuple((r + i) // l for i in range(l))


def extreme_vertex_counts(partition: Sequence[int]):
    """Per-vertex (triangle, four-cycle) counts of a graph whose every
    neighborhood is a disjoint union of cliques with the given sizes."""
    c3 = sum(comb(p, 2) for p in partition)
    c4 = sum(p * comb(p - 1, 2) for p in partition)
    return c3, c4


def extreme_point(r: int, l: int) -> QPoint:
    """Exact density point of the l-th extreme r-regular graph.

    l = 0 denotes K_{r,r}, whose per-vertex four-cycle count is
    (r-1)*C(r,2); l >= 1 uses the balanced partition closed forms.
    """
    if r < 3:
        raise ValueError("extreme points are defined for r >= 3")
    if not (0 <= l <= r):
        raise ValueError(f"need 0 <= l <= r, got l={l}")
    if l == 0:
        return QPoint(Fraction(0), Fraction(r * (r - 1) ** 2, 8))
    c3, c4 = extreme_vertex_counts(balanced_partition(r, l))
    return QPoint(Fraction(c3, 3), Fraction(c4, 4))


def polygon_Qr(r: int) -> Polygon:
    """The convex polygon of attainable (d3, d4) pairs for r-regular graphs.

    Strict convex hull of the r+1 extreme points (collinear boundary
    points dropped). All extreme points lie on the boundary, but for
    r >= 12 consecutive balanced partitions mixing part sizes k and k+1
    give collinear points (their count coordinates satisfy
    c4 = 2(k-1) c3 + const), so the classical corner count
    ceil(r/2) + 2 overcounts; see boundary_corner_count.
    """
    if r < 3:
        raise ValueError("the density polygon is defined for r >= 3")
    return Polygon([extreme_point(r, l) for l in range(r + 1)])


def boundary_corner_count(r: int) -> int:
    """Number of true corners of polygon_Qr(r), computed independently of
    the hull routine by testing local collinearity of consecutive extreme
    points along the boundary chain."""
    pts = [extreme_point(r, l) for l in range(r + 1)]
    chain = [pts[l] for l in range(r, -1, -1)]  # (0,0) up the lower line to P1, then P0
    chain = [p for i, p in enumerate(chain) if i == 0 or p != chain[i - 1]]
    count = 2  # (0,0) and the complete-bipartite point are always corners
    for i in range(1, len(chain) - 1):
        if _cross(chain[i - 1], chain[i], chain[i + 1]) != 0:
            count += 1
    return count


def _interpolate(p: QPoint, q: QPoint, x: Fraction) -> Fraction:
    return p.y + (q.y - p.y) * (x - p.x) / (q.x - p.x)


def boundary_bounds(r: int, x) -> tuple:
    """Exact (lower, upper) square-density bounds at triangle density x.

    Upper bound: the chord from the complete-bipartite point to the
    clique point. Lower bound: the broken line through the extreme
    points l = 1..r, evaluated piecewise.
    """
    x = Fraction(x)
    xmax = Fraction(r * (r - 1), 6)
    if not (0 <= x <= xmax):
        raise ValueError(f"x={x} outside [0, {xmax}]")
    p0 = extreme_point(r, 0)
    pts = [extreme_point(r, l) for l in range(1, r + 1)]
    upper = _interpolate(p0, pts[0], x)
    lower = None
    for left, right in zip(pts[1:], pts[:-1]):
        # x-coordinates strictly decrease with l, so left.x < right.x
        if left.x <= x <= right.x and left.x < right.x:
            lower = _interpolate(left, right, x)
            break
    assert lower is not None and lower <= upper
    return lower, upper


# ---------------------------------------------------------------------------
# rescaled large-r limit region


def scaled_polygon(r: int) -> Polygon:
    """polygon_Qr(r) with x scaled by 6/r^2 and y by 8/r^3."""
    sx = Fraction(6, r * r)
    sy = Fraction(8, r**3)
    return polygon_Qr(r).affine_image(lambda x: sx * x, lambda y: sy * y)


def limit_polygon(cutoff: int = 64) -> Polygon:
    """Finite hull of the limit region, keeping curve points (1/k, 1/k^2)
    for k <= cutoff together with the corners (0,0) and (0,1)."""
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    pts = [qpoint(0, 0), qpoint(0, 1)]
    pts += [QPoint(Fraction(1, k), Fraction(1, k * k)) for k in range(1, cutoff + 1)]
    return Polygon(pts)


def limit_region_contains(p) -> Location:
    """Exact membership in the full limit region (no cutoff needed).

    The region is bounded by x in [0, 1], the top edge y = 1, the left
    edge x = 0 (0 <= y <= 1), and below by the chain of chords between
    consecutive curve points (1/(k+1), 1/(k+1)^2) and (1/k, 1/k^2); the
    chord relevant to a given x > 0 has index k = floor(1/x).
    """
    x, y = Fraction(p[0]), Fraction(p[1])
    if x < 0 or x > 1 or y > 1 or y < 0:
        return Location.OUTSIDE
    if x == 0:
        return Location.BOUNDARY  # 0 <= y <= 1 already ensured
    k = math.floor(1 / x)
    if k * x == 1:
        floor_y = x * x  # exact curve point
    else:
        floor_y = (Fraction(1, k) + Fraction(1, k + 1)) * x - Fraction(1, k * (k + 1))
    if y < floor_y:
        return Location.OUTSIDE
    if y == floor_y or y == 1:
        return Location.BOUNDARY
    return Location.INTERIOR


# ---------------------------------------------------------------------------
# spectral moment coordinates


def densities_to_moments(r: int, d3, d4):
    """Exact (m3, m4) moments of the random-walk eigenvalue distribution
    from the (d3, d4) cycle densities of an r-regular graph."""
    if r < 3:
        raise ValueError("r >= 3 required")
    d3, d4 = Fraction(d3), Fraction(d4)
    m3 = Fraction(6, r**3) * d3
    m4 = Fraction(8, r**4) * d4 + Fraction(2 * r - 1, r**3)
    return m3, m4


def moments_to_densities(r: int, m3, m4):
    """Inverse of densities_to_moments; the two maps compose to identity."""
    if r < 3:
        raise ValueError("r >= 3 required")
    m3, m4 = Fraction(m3), Fraction(m4)
    d3 = m3 * Fraction(r**3, 6)
    d4 = (m4 - Fraction(2 * r - 1, r**3)) * Fraction(r**4, 8)
    return d3, d4


def moment_region(r: int) -> Polygon:
    """Attainable (m3, m4) pairs: the affine image of polygon_Qr(r)."""
    a3 = Fraction(6, r**3)
    a4 = Fraction(8, r**4)
    b4 = Fraction(2 * r - 1, r**3)
    return polygon_Qr(r).affine_image(lambda x: a3 * x, lambda y: a4 * y + b4)
