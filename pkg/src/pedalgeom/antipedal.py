"""Isogonal conjugation and antipedal triangles.

The antipedal triangle of a point K with respect to ABC is the triangle
TUV whose side lines pass through A, B, C perpendicular to KA, KB, KC;
equivalently, ABC is the pedal triangle of K with respect to TUV. Its
area satisfies

    |antipedal area| / |reference area| = 4 R^2 / |R^2 - O K1^2|

where K1 is the isogonal conjugate of K: the common point of the three
cevians through K reflected across the internal angle bisectors. The
conjugate is built here by that literal reflect-and-intersect recipe, and
the three pairwise intersections agreeing doubles as a runtime check of
the concurrency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    TOL,
    Line,
    Point,
    Triangle,
    circumcircle,
    centroid,
    line_intersection,
    line_with_direction,
    line_with_normal,
    require_nondegenerate,
    triangle_scale,
)
from .errors import GeometryError, NearSingular, OnCircumcircle, VertexInput


@dataclass(frozen=True, slots=True)
class IsogonalResult:
    """Isogonal conjugate point, or a flag that it escaped to infinity.

    ``defined`` is False exactly when the input point lies on the
    circumcircle (within the tolerance band), where the reflected cevians
    become parallel; ``point`` is None in that case.
    """

    point: Point | None
    defined: bool


def _unit(v: Point) -> Point:
    n = v.norm()
    return Point(v.x / n, v.y / n)


def _reflect(v: Point, axis: Point) -> Point:
    u = _unit(axis)
    scale = 2.0 * v.dot(u)
    return Point(scale * u.x - v.x, scale * u.y - v.y)


def _require_not_vertex(k: Point, t: Triangle, tol: float) -> None:
    scale = triangle_scale(t)
    for v in t.vertices:
        if k.distance(v) <= tol * scale:
            raise VertexInput(f"point {k} coincides with triangle vertex {v}")


def isogonal_rays(k: Point, t: Triangle, tol: float = TOL) -> tuple[Line, Line, Line]:
    """Cevians through ``k`` reflected across the internal bisector at each vertex."""
    require_nondegenerate(t, tol)
    _require_not_vertex(k, t, tol)
    rays = []
    for vertex, p, q in ((t.a, t.b, t.c), (t.b, t.c, t.a), (t.c, t.a, t.b)):
        bisector = _unit(p - vertex) + _unit(q - vertex)
        reflected = _reflect(k - vertex, bisector)
        rays.append(line_with_direction(vertex, reflected))
    return rays[0], rays[1], rays[2]


def isogonal_conjugate(k: Point, t: Triangle, tol: float = TOL) -> IsogonalResult:
    """Isogonal conjugate of ``k``, by reflecting the cevians and intersecting.

    Fixed points are the incenter (each cevian reflects onto itself) and
    the construction swaps circumcenter and orthocenter. On the
    circumcircle the reflected cevians are parallel and the conjugate is
    at infinity; that case returns ``defined=False`` instead of a point.
    """
    require_nondegenerate(t, tol)
    _require_not_vertex(k, t, tol)
    circle = circumcircle(t, tol)
    if abs(k.distance(circle.center) - circle.radius) <= tol * circle.radius:
        return IsogonalResult(None, False)
    ra, rb, rc = isogonal_rays(k, t, tol)
    p_ab = line_intersection(ra, rb)
    p_ac = line_intersection(ra, rc)
    p_bc = line_intersection(rb, rc)
    spread = max(p_ab.distance(p_ac), p_ab.distance(p_bc), p_ac.distance(p_bc))
    g = centroid(t)
    reach = max(
        triangle_scale(t), p_ab.distance(g), p_ac.distance(g), p_bc.distance(g)
    )
    if spread > tol * reach:
        raise GeometryError(
            f"reflected cevians failed to concur (spread {spread:.3e} at scale {reach:.3e})"
        )
    conjugate = Point(
        (p_ab.x + p_ac.x + p_bc.x) / 3.0, (p_ab.y + p_ac.y + p_bc.y) / 3.0
    )
    return IsogonalResult(conjugate, True)


def antipedal_triangle(k: Point, t: Triangle, tol: float = TOL) -> Triangle:
    """Triangle whose side lines pass through A, B, C perpendicular to KA, KB, KC.

    Vertex order matches the pedal correspondence: T joins the
    perpendiculars at B and C, U those at A and C, V those at A and B, so
    that the pedal triangle of ``k`` with respect to the result is exactly
    ``t`` again, vertex for vertex.
    """
    require_nondegenerate(t, tol)
    _require_not_vertex(k, t, tol)
    circle = circumcircle(t, tol)
    if abs(k.distance(circle.center) - circle.radius) <= tol * circle.radius:
        raise OnCircumcircle(
            f"point {k} lies on the circumcircle; the perpendiculars bound no triangle"
        )
    side_a = line_with_normal(t.a, t.a - k)
    side_b = line_with_normal(t.b, t.b - k)
    side_c = line_with_normal(t.c, t.c - k)
    return Triangle(
        line_intersection(side_b, side_c),
        line_intersection(side_a, side_c),
        line_intersection(side_a, side_b),
    )


def antipedal_area_ratio(k: Point, t: Triangle, tol: float = TOL) -> float:
    """Antipedal-to-reference area ratio by formula: ``4 R^2 / |R^2 - O K1^2|``.

    ``K1`` is the isogonal conjugate of ``k``. The value equals
    ``|signed_area(antipedal_triangle(k, t))| / |signed_area(t)|`` and is
    the reciprocal of the pedal area ratio at ``K1``: the pedal triangle
    of ``K1`` and the antipedal triangle of ``k`` have parallel sides, and
    their areas multiply to the squared reference area.
    """
    require_nondegenerate(t, tol)
    _require_not_vertex(k, t, tol)
    circle = circumcircle(t, tol)
    if abs(k.distance(circle.center) - circle.radius) <= tol * circle.radius:
        raise OnCircumcircle(f"point {k} lies on the circumcircle")
    conjugate = isogonal_conjugate(k, t, tol)
    if not conjugate.defined:
        raise OnCircumcircle(f"isogonal conjugate of {k} is at infinity")
    r2 = circle.radius * circle.radius
    ok2 = conjugate.point.distance(circle.center) ** 2
    denominator = abs(r2 - ok2)
    if denominator <= tol * r2:
        raise NearSingular(
            f"conjugate sits within {math.sqrt(tol):.1e}-band of the circumcircle; "
            "the antipedal area diverges"
        )
    return 4.0 * r2 / denominator
