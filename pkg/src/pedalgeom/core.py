"""Planar geometric primitives and constructions.

Immutable value types (points, lines, circles, triangles, affine maps) and
the small set of operations everything else builds on: signed areas,
circumcircles, perpendicular feet, line calibration, and affine maps onto
the unit right triangle.

All predicates are tolerance-based and scale-aware: a threshold ``tol`` is
interpreted relative to the size of the objects involved, so results are
invariant under uniform rescaling of the input coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    CoincidentPoints,
    DegenerateTriangle,
    ParallelLines,
    PointOnLine,
)

TOL = 1e-9
"""Default relative tolerance for geometric predicates."""


@dataclass(frozen=True, slots=True)
class Point:
    """A position in the Cartesian plane. Coordinates must be finite."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(
                f"point coordinates must be finite, got ({self.x!r}, {self.y!r})"
            )

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, factor: float) -> Point:
        return Point(self.x * factor, self.y * factor)

    __rmul__ = __mul__

    def dot(self, other: Point) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point) -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def distance(self, other: Point) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True, slots=True)
class Line:
    """An oriented line ``alpha*x + beta*y + gamma = 0``, stored normalized.

    The constructor rescales the coefficients so that
    ``alpha**2 + beta**2 == 1``; ``evaluate`` is then the signed distance
    from a point to the line, with the sign fixed by the stored orientation.
    """

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self) -> None:
        n = math.hypot(self.alpha, self.beta)
        if n == 0.0 or not (math.isfinite(n) and math.isfinite(self.gamma)):
            raise ValueError("line requires a nonzero finite normal vector")
        if n != 1.0:
            object.__setattr__(self, "alpha", self.alpha / n)
            object.__setattr__(self, "beta", self.beta / n)
            object.__setattr__(self, "gamma", self.gamma / n)

    def evaluate(self, p: Point) -> float:
        """Signed distance from ``p`` to the line."""
        return self.alpha * p.x + self.beta * p.y + self.gamma

    def direction(self) -> Point:
        """Unit vector along the line."""
        return Point(-self.beta, self.alpha)

    def __neg__(self) -> Line:
        return Line(-self.alpha, -self.beta, -self.gamma)


@dataclass(frozen=True, slots=True)
class Triangle:
    """An ordered vertex triple; orientation is the sign of ``signed_area``.

    Degeneracy is a queryable property (``is_degenerate``), not a
    construction error: collapsed triangles are valid values because some
    constructions legitimately produce them.
    """

    a: Point
    b: Point
    c: Point

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True, slots=True)
class Circle:
    """A circle given by center and nonnegative radius."""

    center: Point
    radius: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.radius) or self.radius < 0.0:
            raise ValueError(f"circle radius must be finite and >= 0, got {self.radius!r}")


@dataclass(frozen=True, slots=True)
class AffineMap:
    """An invertible map ``p -> M p + t`` with linear part ``M`` rows (m11 m12; m21 m22)."""

    m11: float
    m12: float
    m21: float
    m22: float
    t1: float
    t2: float

    def __post_init__(self) -> None:
        values = (self.m11, self.m12, self.m21, self.m22, self.t1, self.t2)
        if not all(math.isfinite(v) for v in values):
            raise ValueError("affine map entries must be finite")
        if self.m11 * self.m22 - self.m12 * self.m21 == 0.0:
            raise ValueError("affine map must have an invertible linear part")

    @property
    def det(self) -> float:
        return self.m11 * self.m22 - self.m12 * self.m21


IDENTITY_MAP = AffineMap(1.0, 0.0, 0.0, 1.0, 0.0, 0.0)


def signed_area(t: Triangle) -> float:
    """Half the edge cross product: positive iff the vertices run counterclockwise.

    The vertices are evaluated in a canonical (lexicographic) order with the
    permutation parity applied afterwards, which makes vertex-swap
    antisymmetry exact in floating point, not just approximate.
    """
    pts = [(t.a.x, t.a.y), (t.b.x, t.b.y), (t.c.x, t.c.y)]
    sign = 1.0
    if pts[1] < pts[0]:
        pts[0], pts[1] = pts[1], pts[0]
        sign = -sign
    if pts[2] < pts[1]:
        pts[1], pts[2] = pts[2], pts[1]
        sign = -sign
    if pts[1] < pts[0]:
        pts[0], pts[1] = pts[1], pts[0]
        sign = -sign
    (ax, ay), (bx, by), (cx, cy) = pts
    return sign * 0.5 * ((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))


def triangle_scale(t: Triangle) -> float:
    """Characteristic length of a triangle: its longest side."""
    return max(t.a.distance(t.b), t.b.distance(t.c), t.c.distance(t.a))


def is_degenerate(t: Triangle, tol: float = TOL) -> bool:
    """True when the area is at most ``tol`` times the squared diameter."""
    return abs(signed_area(t)) <= tol * triangle_scale(t) ** 2


def require_nondegenerate(t: Triangle, tol: float = TOL) -> None:
    """Raise :class:`DegenerateTriangle` when ``t`` fails ``is_degenerate``."""
    if is_degenerate(t, tol):
        raise DegenerateTriangle(
            f"triangle with vertices {t.a}, {t.b}, {t.c} is degenerate"
        )


def centroid(t: Triangle) -> Point:
    return Point((t.a.x + t.b.x + t.c.x) / 3.0, (t.a.y + t.b.y + t.c.y) / 3.0)


def incenter(t: Triangle) -> Point:
    """Intersection of the internal angle bisectors, via side-length weights."""
    la = t.b.distance(t.c)
    lb = t.a.distance(t.c)
    lc = t.a.distance(t.b)
    w = la + lb + lc
    return Point(
        (la * t.a.x + lb * t.b.x + lc * t.c.x) / w,
        (la * t.a.y + lb * t.b.y + lc * t.c.y) / w,
    )


def circumcircle(t: Triangle, tol: float = TOL) -> Circle:
    """Circle through the three vertices.

    Solves the two perpendicular-bisector equations in coordinates centered
    at the first vertex, which keeps the 2x2 system well scaled for
    triangles far from the origin. The radius is the distance from the
    solved center to the first vertex.
    """
    require_nondegenerate(t, tol)
    ux = t.b.x - t.a.x
    uy = t.b.y - t.a.y
    vx = t.c.x - t.a.x
    vy = t.c.y - t.a.y
    det = 2.0 * (ux * vy - uy * vx)
    u2 = ux * ux + uy * uy
    v2 = vx * vx + vy * vy
    ox = (vy * u2 - uy * v2) / det
    oy = (ux * v2 - vx * u2) / det
    center = Point(t.a.x + ox, t.a.y + oy)
    return Circle(center, math.hypot(ox, oy))


def line_through(p: Point, q: Point, tol: float = TOL) -> Line:
    """Normalized line through two distinct points.

    The coincidence test is relative to the coordinate magnitude: points
    closer than ``tol * max(|p|, |q|)`` are treated as the same point.
    """
    chord = p.distance(q)
    if chord <= tol * max(p.norm(), q.norm()):
        raise CoincidentPoints(f"cannot build a line through {p} and {q}")
    return Line(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y)


def calibrate_interior(line: Line, interior: Point, tol: float = TOL) -> Line:
    """Orient ``line`` so the given interior point evaluates strictly positive."""
    value = line.evaluate(interior)
    scale = max(interior.norm(), abs(line.gamma))
    if abs(value) <= tol * scale:
        raise PointOnLine(f"calibration point {interior} lies on the line")
    return line if value > 0.0 else -line


def project_onto(p: Point, line: Line) -> Point:
    """Foot of the perpendicular from ``p`` onto ``line``."""
    d = line.evaluate(p)
    return Point(p.x - d * line.alpha, p.y - d * line.beta)


def line_intersection(l1: Line, l2: Line) -> Point:
    """Intersection point of two non-parallel lines."""
    det = l1.alpha * l2.beta - l1.beta * l2.alpha
    if det == 0.0:
        raise ParallelLines("lines are parallel")
    x = (l1.beta * l2.gamma - l2.beta * l1.gamma) / det
    y = (l1.gamma * l2.alpha - l2.gamma * l1.alpha) / det
    return Point(x, y)


def line_with_normal(p: Point, normal: Point) -> Line:
    """Line through ``p`` whose normal direction is ``normal``."""
    if normal.x == 0.0 and normal.y == 0.0:
        raise ValueError("normal vector must be nonzero")
    return Line(normal.x, normal.y, -(normal.x * p.x + normal.y * p.y))


def line_with_direction(p: Point, direction: Point) -> Line:
    """Line through ``p`` running along ``direction``."""
    return line_with_normal(p, Point(direction.y, -direction.x))


def affine_to_unit(t: Triangle, tol: float = TOL) -> AffineMap:
    """Affine map sending the vertices of ``t`` to (0,1), (0,0), (1,0).

    Built from M(a-b) = (0,1) and M(c-b) = (1,0) plus the translation
    -M(b); the target is the right triangle with unit legs on the axes.
    """
    require_nondegenerate(t, tol)
    abx = t.a.x - t.b.x
    aby = t.a.y - t.b.y
    cbx = t.c.x - t.b.x
    cby = t.c.y - t.b.y
    det = abx * cby - aby * cbx
    m11 = -aby / det
    m12 = abx / det
    m21 = cby / det
    m22 = -cbx / det
    t1 = -(m11 * t.b.x + m12 * t.b.y)
    t2 = -(m21 * t.b.x + m22 * t.b.y)
    return AffineMap(m11, m12, m21, m22, t1, t2)


def apply_affine(m: AffineMap, p: Point) -> Point:
    return Point(m.m11 * p.x + m.m12 * p.y + m.t1, m.m21 * p.x + m.m22 * p.y + m.t2)


def transform_triangle(m: AffineMap, t: Triangle) -> Triangle:
    return Triangle(apply_affine(m, t.a), apply_affine(m, t.b), apply_affine(m, t.c))


def invert_affine(m: AffineMap) -> AffineMap:
    d = m.det
    i11 = m.m22 / d
    i12 = -m.m12 / d
    i21 = -m.m21 / d
    i22 = m.m11 / d
    return AffineMap(
        i11,
        i12,
        i21,
        i22,
        -(i11 * m.t1 + i12 * m.t2),
        -(i21 * m.t1 + i22 * m.t2),
    )
