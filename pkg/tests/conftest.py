"""Shared independent oracles for the geometry tests.

Every oracle here goes through numpy linear algebra on the raw defining
equations, deliberately avoiding the package's own construction paths.
"""

from __future__ import annotations

import numpy as np

from pedalgeom import Point, Triangle


def circumcenter_oracle(t: Triangle) -> tuple[float, float]:
    """Solve the two perpendicular-bisector equations 2(b-a).O = |b|^2 - |a|^2."""
    a, b, c = ((p.x, p.y) for p in t.vertices)
    m = np.array(
        [
            [2.0 * (b[0] - a[0]), 2.0 * (b[1] - a[1])],
            [2.0 * (c[0] - a[0]), 2.0 * (c[1] - a[1])],
        ]
    )
    rhs = np.array(
        [
            b[0] ** 2 + b[1] ** 2 - a[0] ** 2 - a[1] ** 2,
            c[0] ** 2 + c[1] ** 2 - a[0] ** 2 - a[1] ** 2,
        ]
    )
    ox, oy = np.linalg.solve(m, rhs)
    return float(ox), float(oy)


def foot_oracle(p: Point, q1: Point, q2: Point) -> tuple[float, float]:
    """Foot of the perpendicular from p to the line through q1, q2, computed
    parametrically: q1 + s*(q2-q1) with (p - foot).(q2-q1) = 0."""
    d = np.array([q2.x - q1.x, q2.y - q1.y])
    w = np.array([p.x - q1.x, p.y - q1.y])
    s = float(w @ d) / float(d @ d)
    return float(q1.x + s * d[0]), float(q1.y + s * d[1])


def shoelace_oracle(p1, p2, p3) -> float:
    """Plain cyclic shoelace over three points (x, y) or Point."""

    def xy(p):
        return (p.x, p.y) if isinstance(p, Point) else (p[0], p[1])

    (x1, y1), (x2, y2), (x3, y3) = xy(p1), xy(p2), xy(p3)
    return 0.5 * (x1 * y2 - x2 * y1 + x2 * y3 - x3 * y2 + x3 * y1 - x1 * y3)


def orthocenter_oracle(t: Triangle) -> tuple[float, float]:
    """Intersection of two altitude lines, solved directly: the altitude from
    a is {x : (x - a).(c - b) = 0}."""
    a, b, c = t.vertices
    m = np.array([[c.x - b.x, c.y - b.y], [a.x - c.x, a.y - c.y]])
    rhs = np.array(
        [a.x * (c.x - b.x) + a.y * (c.y - b.y), b.x * (a.x - c.x) + b.y * (a.y - c.y)]
    )
    hx, hy = np.linalg.solve(m, rhs)
    return float(hx), float(hy)
