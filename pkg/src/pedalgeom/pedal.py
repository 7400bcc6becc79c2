"""Pedal triangles and the area identities they satisfy.

The pedal triangle of a point P with respect to a reference triangle ABC
has vertices at the perpendicular feet of P on the three side lines. Its
area is tied to the circumcircle (O, R) of the reference triangle by

    |pedal area| / |reference area| = |R^2 - OP^2| / (4 R^2)

which vanishes exactly on the circumcircle (the feet become collinear, the
classical three-feet line) and peaks at 1/4 when P = O. This module
constructs pedal triangles, evaluates both sides of the identity, and
exposes the signed decomposition of the pedal area into the three
sub-triangles cut off at P.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import (
    TOL,
    Circle,
    Line,
    Point,
    Triangle,
    calibrate_interior,
    centroid,
    circumcircle,
    line_through,
    project_onto,
    require_nondegenerate,
    signed_area,
    triangle_scale,
)
from .errors import NegativeRatio, NotRightTriangle


class CirclePosition(enum.Enum):
    """Location of a point relative to a circle, with an `on` tolerance band."""

    INSIDE = "inside"
    ON = "on"
    OUTSIDE = "outside"


@dataclass(frozen=True, slots=True)
class DirectedDistances:
    """Signed distances from a point to the three side lines.

    ``d_a`` is the distance to line BC, ``d_b`` to line AC, ``d_c`` to
    line AB. The side lines are oriented so that all three values are
    strictly positive exactly when the point is strictly inside the
    triangle.
    """

    d_a: float
    d_b: float
    d_c: float


@dataclass(frozen=True, slots=True)
class SignProfile:
    """Signs of the pairwise distance products plus the circumcircle test.

    ``distance_product_signs`` holds the signs of
    ``(d_b*d_c, d_a*d_c, d_a*d_b)`` as -1, 0, or +1.
    """

    distance_product_signs: tuple[int, int, int]
    inside_circumcircle: CirclePosition


def side_lines(t: Triangle, tol: float = TOL) -> tuple[Line, Line, Line]:
    """Side lines (BC, AC, AB), each oriented positive toward the centroid.

    The centroid is always interior, so this calibration realizes the
    all-positive-inside sign convention for directed distances.
    """
    require_nondegenerate(t, tol)
    g = centroid(t)
    return (
        calibrate_interior(line_through(t.b, t.c, tol), g, tol),
        calibrate_interior(line_through(t.a, t.c, tol), g, tol),
        calibrate_interior(line_through(t.a, t.b, tol), g, tol),
    )


def pedal_triangle(p: Point, t: Triangle, tol: float = TOL) -> Triangle:
    """Feet of the perpendiculars from ``p`` onto lines BC, AC, AB, in that order.

    The result may be degenerate (its vertices collinear); that happens
    exactly when ``p`` lies on the circumcircle of ``t`` and is valid
    output, not an error.
    """
    require_nondegenerate(t, tol)
    return Triangle(
        project_onto(p, line_through(t.b, t.c, tol)),
        project_onto(p, line_through(t.a, t.c, tol)),
        project_onto(p, line_through(t.a, t.b, tol)),
    )


def directed_distances(p: Point, t: Triangle, tol: float = TOL) -> DirectedDistances:
    """Directed distances from ``p`` to the side lines of ``t``.

    Because the lines are normalized, each value is the plain point-line
    evaluation; the magnitude is the Euclidean distance.
    """
    bc, ac, ab = side_lines(t, tol)
    return DirectedDistances(bc.evaluate(p), ac.evaluate(p), ab.evaluate(p))


def _sines(t: Triangle) -> tuple[float, float, float]:
    # Interior angles lie in (0, pi), so the sine recovered from the
    # law-of-cosines cosine is unambiguous and nonnegative.
    la = t.b.distance(t.c)
    lb = t.a.distance(t.c)
    lc = t.a.distance(t.b)

    def sine(opposite: float, s1: float, s2: float) -> float:
        cos = (s1 * s1 + s2 * s2 - opposite * opposite) / (2.0 * s1 * s2)
        return math.sqrt(max(0.0, 1.0 - cos * cos))

    return sine(la, lb, lc), sine(lb, la, lc), sine(lc, la, lb)


def signed_decomposition(p: Point, t: Triangle, tol: float = TOL) -> float:
    """Pedal-triangle area rebuilt from directed distances, with a sign.

    Splitting the pedal triangle at ``p`` gives three sub-triangles whose
    areas are products of two directed distances and the sine of the
    reference angle enclosed between the corresponding feet:

        S = (d_b*d_c*sin A + d_a*d_b*sin C + d_a*d_c*sin B) / 2

    The signed products make the region-by-region case analysis collapse:
    S equals +|pedal area| when ``p`` is inside the circumcircle,
    -|pedal area| when outside, and 0 on it.
    """
    d = directed_distances(p, t, tol)
    sin_a, sin_b, sin_c = _sines(t)
    return 0.5 * (d.d_b * d.d_c * sin_a + d.d_a * d.d_b * sin_c + d.d_a * d.d_c * sin_b)


def pedal_area_ratio(p: Point, t: Triangle, tol: float = TOL) -> float:
    """Pedal-to-reference area ratio by formula: ``|R^2 - OP^2| / (4 R^2)``.

    Equals ``|signed_area(pedal_triangle(p, t))| / |signed_area(t)|`` for
    every point in the plane.
    """
    circle = circumcircle(t, tol)
    r2 = circle.radius * circle.radius
    op2 = (p.x - circle.center.x) ** 2 + (p.y - circle.center.y) ** 2
    return abs(r2 - op2) / (4.0 * r2)


def right_triangle_d_point(t: Triangle, tol: float = TOL) -> tuple[Point, float]:
    """Extra zero-locus witness for right triangles, beyond the six circle points.

    For a triangle right-angled at its third vertex C, the reflection D of
    B across C (so C is the midpoint of DB) satisfies the pedal area
    identity with ratio ``a^2 / (2 R^2)`` where ``a = BC``. Returns
    ``(D, ratio)``.
    """
    require_nondegenerate(t, tol)
    u = t.a - t.c
    v = t.b - t.c
    cos_c = u.dot(v) / (u.norm() * v.norm())
    # cos of an angle near pi/2 is the angular deviation itself.
    if abs(cos_c) > tol:
        raise NotRightTriangle(f"angle at {t.c} deviates from pi/2 by ~{abs(cos_c):.3e} rad")
    d_point = Point(2.0 * t.c.x - t.b.x, 2.0 * t.c.y - t.b.y)
    a_len = t.b.distance(t.c)
    radius = circumcircle(t, tol).radius
    return d_point, a_len * a_len / (2.0 * radius * radius)


def simson_check(p: Point, t: Triangle, tol: float = TOL) -> tuple[bool, float]:
    """Test whether the three pedal feet of ``p`` are collinear.

    The residual is the pedal-triangle area in units of the reference
    area (an area needs a squared length scale; the reference area is the
    natural one). Feet are collinear exactly when ``p`` is on the
    circumcircle, so ``residual <= tol`` is equivalent to the circle
    membership test up to the tolerance band.
    """
    require_nondegenerate(t, tol)
    residual = abs(signed_area(pedal_triangle(p, t, tol))) / abs(signed_area(t))
    return residual <= tol, residual


def iso_area_locus(t: Triangle, ratio: float, tol: float = TOL) -> list[Circle]:
    """Circles of points whose pedal triangles all have the given area ratio.

    Solving ``|R^2 - OP^2| / (4 R^2) = ratio`` for OP gives circles
    concentric with the circumcircle: an inner one of radius
    ``R*sqrt(1 - 4*ratio)`` whenever ``ratio <= 1/4`` (collapsing to the
    center point at ratio exactly 1/4) and an outer one of radius
    ``R*sqrt(1 + 4*ratio)`` for any positive ratio. Ratio 0 returns the
    circumcircle itself.
    """
    if not (ratio >= 0.0) or not math.isfinite(ratio):
        raise NegativeRatio(f"area ratio must be >= 0, got {ratio!r}")
    circle = circumcircle(t, tol)
    if ratio == 0.0:
        return [circle]
    circles = []
    inner_sq = 1.0 - 4.0 * ratio
    if inner_sq >= 0.0:
        circles.append(Circle(circle.center, circle.radius * math.sqrt(inner_sq)))
    circles.append(Circle(circle.center, circle.radius * math.sqrt(1.0 + 4.0 * ratio)))
    return circles


def circle_position(p: Point, circle: Circle, tol: float = TOL) -> CirclePosition:
    """Classify ``p`` against ``circle`` with an ``on`` band of ``tol * radius``."""
    offset = p.distance(circle.center) - circle.radius
    if abs(offset) <= tol * circle.radius:
        return CirclePosition.ON
    return CirclePosition.INSIDE if offset < 0.0 else CirclePosition.OUTSIDE


def sign_profile(p: Point, t: Triangle, tol: float = TOL) -> SignProfile:
    """Signs of the distance products together with the circumcircle test.

    The signs are computed, never table-looked-up: each entry is the sign
    of the corresponding product of directed distances, with products
    smaller than ``tol * scale^2`` flattened to 0.
    """
    d = directed_distances(p, t, tol)
    band = tol * triangle_scale(t) ** 2

    def psign(value: float) -> int:
        if abs(value) <= band:
            return 0
        return 1 if value > 0.0 else -1

    signs = (psign(d.d_b * d.d_c), psign(d.d_a * d.d_c), psign(d.d_a * d.d_b))
    return SignProfile(signs, circle_position(p, circumcircle(t, tol), tol))
