"""Doubly-inscribed triangle chains and the geometric-mean area identity.

Inscribe a triangle B1B2B3 in A1A2A3 by dividing each side in a prescribed
positive ratio, then inscribe C1C2C3 in B1B2B3 reusing the same ratios one
level down, each measured from the opposite end of its side (the level-two
flip is forced: it is what makes the innermost triangle come out parallel
to the outer one). The resulting inner triangle is homotopic to the outer
one (pairwise parallel sides), and the middle area is the geometric mean
of the other two:

    area(B)^2 = area(A) * area(C)

Both facts are affine-invariant, so they can be checked on the unit right
triangle and transported anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    TOL,
    Point,
    Triangle,
    line_through,
    require_nondegenerate,
    signed_area,
    triangle_scale,
)
from .errors import (
    CoincidentPoints,
    DegenerateInner,
    NonPositiveRatio,
    NotInscribed,
)


@dataclass(frozen=True, slots=True)
class RatioTriple:
    """Three strictly positive, finite side-division ratios."""

    k1: float
    k2: float
    k3: float

    def __post_init__(self) -> None:
        for name, value in (("k1", self.k1), ("k2", self.k2), ("k3", self.k3)):
            if not math.isfinite(value) or value <= 0.0:
                raise NonPositiveRatio(f"{name} must be positive and finite, got {value!r}")


def divide_segment(m: Point, p: Point, k: float, tol: float = TOL) -> Point:
    """Point N strictly between ``m`` and ``p`` with ``MN / NP = k``.

    Coordinates are the weighted average ``(m + k*p) / (1 + k)``.
    """
    if not math.isfinite(k) or k <= 0.0:
        raise NonPositiveRatio(f"division ratio must be positive and finite, got {k!r}")
    if m.distance(p) <= tol * max(m.norm(), p.norm()):
        raise CoincidentPoints(f"cannot divide the empty segment at {m}")
    w = 1.0 + k
    return Point((m.x + k * p.x) / w, (m.y + k * p.y) / w)


def inscribe_b(t: Triangle, k: RatioTriple, tol: float = TOL) -> Triangle:
    """First inscribed triangle: one vertex on each side of ``t``.

    With vertices (A1, A2, A3) = (t.a, t.b, t.c), B1 lies on A2A3 with
    A3B1/B1A2 = k1, B2 on A1A3 with A1B2/B2A3 = k2, and B3 on A2A1 with
    A2B3/B3A1 = k3. On the unit right triangle this lands B1 at
    (1/(1+k1), 0), B2 at (k2/(1+k2), 1/(1+k2)), B3 at (0, k3/(1+k3)).
    """
    require_nondegenerate(t, tol)
    return Triangle(
        divide_segment(t.c, t.b, k.k1, tol),
        divide_segment(t.a, t.c, k.k2, tol),
        divide_segment(t.b, t.a, k.k3, tol),
    )


def inscribe_c(t: Triangle, k: RatioTriple, tol: float = TOL) -> tuple[Triangle, Triangle]:
    """Both levels of the chain: the B-triangle and the C-triangle inside it.

    C1 lies on B2B3 with B2C1/C1B3 = k1, C2 on B1B3 with B3C2/C2B1 = k2,
    C3 on B1B2 with B1C3/C3B2 = k3: the same ratios one level down, each
    measured from the opposite end of its side. That flip is what pins C
    to the unique inscribed triangle homotopic to ``t``; measuring from
    the same ends instead yields an equal-area triangle that is not
    parallel to the outer one. Returns ``(B, C)``.
    """
    b = inscribe_b(t, k, tol)
    if abs(signed_area(b)) <= tol * triangle_scale(b) ** 2:
        # Unreachable for positive ratios; the inner area is a strictly
        # positive fraction of the outer one.
        raise DegenerateInner(f"inner triangle collapsed: {b!r}")
    c = Triangle(
        divide_segment(b.b, b.c, k.k1, tol),
        divide_segment(b.c, b.a, k.k2, tol),
        divide_segment(b.a, b.b, k.k3, tol),
    )
    return b, c


def _side_directions(t: Triangle) -> tuple[Point, Point, Point]:
    def unit(v: Point) -> Point:
        n = v.norm()
        return Point(v.x / n, v.y / n)

    return unit(t.b - t.a), unit(t.c - t.b), unit(t.a - t.c)


def homotopic_check(
    t1: Triangle, t2: Triangle, tol: float = TOL
) -> tuple[bool, int | None]:
    """Whether two triangles have pairwise parallel sides.

    Sides are compared under the identity vertex correspondence and under
    the two cyclic relabelings of ``t2`` (labeling is a convention, the
    parallelism is the geometry). Returns ``(matched, shift)`` where shift
    is the cyclic offset that matched, or None.
    """
    require_nondegenerate(t1, tol)
    require_nondegenerate(t2, tol)
    d1 = _side_directions(t1)
    d2 = _side_directions(t2)
    for shift in (0, 1, 2):
        if all(abs(d1[i].cross(d2[(i + shift) % 3])) <= tol for i in range(3)):
            return True, shift
    return False, None


def geometric_mean_identity(
    t: Triangle, k: RatioTriple, tol: float = TOL
) -> tuple[float, float]:
    """Both sides of the area identity: ``(area(B)^2, area(A) * area(C))``."""
    b, c = inscribe_c(t, k, tol)
    lhs = signed_area(b) ** 2
    rhs = abs(signed_area(t)) * abs(signed_area(c))
    return lhs, rhs


def _ratio_along(start: Point, end: Point, vertex: Point, tol: float, label: str) -> float:
    side = line_through(start, end, tol)
    scale = start.distance(end)
    if abs(side.evaluate(vertex)) > tol * scale:
        raise NotInscribed(f"{label} is off its side line by more than tol*scale")
    from_start = vertex.distance(start)
    to_end = vertex.distance(end)
    if from_start <= tol * scale or to_end <= tol * scale:
        raise NotInscribed(f"{label} sits on a side endpoint")
    if (vertex - start).dot(end - start) < 0.0 or (vertex - end).dot(start - end) < 0.0:
        raise NotInscribed(f"{label} falls outside its side segment")
    return from_start / to_end


def recover_ratios(outer: Triangle, inscribed: Triangle, tol: float = TOL) -> RatioTriple:
    """Measure the division ratios of an inscribed triangle from segment lengths.

    Inverts ``inscribe_b``: the first inscribed vertex must lie strictly
    inside side A2A3 of the outer triangle, the second inside A1A3, the
    third inside A2A1. Feeding the result back into the chain constructs a
    C-triangle homotopic to the outer one.
    """
    require_nondegenerate(outer, tol)
    return RatioTriple(
        _ratio_along(outer.c, outer.b, inscribed.a, tol, "first inscribed vertex"),
        _ratio_along(outer.a, outer.c, inscribed.b, tol, "second inscribed vertex"),
        _ratio_along(outer.b, outer.a, inscribed.c, tol, "third inscribed vertex"),
    )
