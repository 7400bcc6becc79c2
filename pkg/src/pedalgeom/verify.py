"""Randomized verification suite for every identity the package implements.

Each check draws its own deterministic sample stream (spawned from one
seed, so checks never perturb each other), runs a dual-route comparison
(closed formula against an independently constructed figure, or an exact
invariant), and reports its worst residual against a fixed threshold.

Sampling conventions: triangle vertices are uniform in [-10, 10]^2 with
rejection when the area falls below 1e-3 of the squared diameter (the
scale-aware quality floor keeps the conditioning number diameter^2/area
at or below 1000, without which thin wedges inflate pure floating-point
noise past the thresholds being verified); query points are uniform in
[-20, 20]^2. Value comparisons use a relative tolerance with an absolute
floor at the quantity's natural scale (1 for normalized area ratios), the
standard two-sided closeness test for data that crosses zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .antipedal import (
    antipedal_area_ratio,
    antipedal_triangle,
    isogonal_conjugate,
    isogonal_rays,
)
from .core import (
    TOL,
    AffineMap,
    Point,
    Triangle,
    apply_affine,
    calibrate_interior,
    centroid,
    circumcircle,
    incenter,
    invert_affine,
    line_intersection,
    line_through,
    line_with_normal,
    project_onto,
    signed_area,
    transform_triangle,
    triangle_scale,
)
from .inscribe import (
    RatioTriple,
    geometric_mean_identity,
    homotopic_check,
    inscribe_b,
    inscribe_c,
    recover_ratios,
)
from .pedal import (
    iso_area_locus,
    pedal_area_ratio,
    pedal_triangle,
    right_triangle_d_point,
    signed_decomposition,
    simson_check,
)

CIRCLE_BAND = 1e-6
"""Squared-radius exclusion band around the circumcircle for sign checks."""


@dataclass(frozen=True)
class CheckResult:
    name: str
    samples: int
    tolerance: float
    max_residual: float
    passed: bool


def _result(name: str, samples: int, tolerance: float, residual: float) -> CheckResult:
    return CheckResult(name, samples, tolerance, residual, residual <= tolerance)


def relative_gap(x: float, y: float, floor: float = 1.0) -> float:
    """|x - y| over the larger magnitude, floored at the natural scale."""
    return abs(x - y) / max(abs(x), abs(y), floor)


# ---------------------------------------------------------------------------
# samplers


def sample_triangle(rng: np.random.Generator) -> Triangle:
    while True:
        v = rng.uniform(-10.0, 10.0, 6)
        t = Triangle(Point(v[0], v[1]), Point(v[2], v[3]), Point(v[4], v[5]))
        if abs(signed_area(t)) >= 1e-3 * triangle_scale(t) ** 2:
            return t


def sample_point(rng: np.random.Generator) -> Point:
    x, y = rng.uniform(-20.0, 20.0, 2)
    return Point(x, y)


def sample_interior_point(rng: np.random.Generator, t: Triangle) -> Point:
    u, v = rng.uniform(0.0, 1.0, 2)
    if u + v > 1.0:
        u, v = 1.0 - u, 1.0 - v
    w = 1.0 - u - v
    return Point(
        u * t.a.x + v * t.b.x + w * t.c.x,
        u * t.a.y + v * t.b.y + w * t.c.y,
    )


def sample_on_circumcircle(rng: np.random.Generator, t: Triangle) -> Point:
    circle = circumcircle(t)
    theta = rng.uniform(0.0, 2.0 * math.pi)
    return Point(
        circle.center.x + circle.radius * math.cos(theta),
        circle.center.y + circle.radius * math.sin(theta),
    )


def sample_off_circumcircle(rng: np.random.Generator, t: Triangle) -> Point:
    """Point with |OP - R| >= 1e-3 * R, on either side of the circle."""
    circle = circumcircle(t)
    theta = rng.uniform(0.0, 2.0 * math.pi)
    offset = rng.uniform(1e-3, 1.0)
    factor = 1.0 + offset if rng.uniform() < 0.5 else 1.0 - offset
    r = circle.radius * abs(factor)
    return Point(
        circle.center.x + r * math.cos(theta),
        circle.center.y + r * math.sin(theta),
    )


def sample_ratio_triple(rng: np.random.Generator) -> RatioTriple:
    k = rng.uniform(0.1, 10.0, 3)
    return RatioTriple(k[0], k[1], k[2])


def sample_affine(rng: np.random.Generator) -> AffineMap:
    while True:
        m = rng.uniform(-2.0, 2.0, 4)
        if abs(m[0] * m[3] - m[1] * m[2]) >= 0.3:
            s = rng.uniform(-5.0, 5.0, 2)
            return AffineMap(m[0], m[1], m[2], m[3], s[0], s[1])


def sample_right_triangle(rng: np.random.Generator) -> Triangle:
    """Right angle at the third vertex, legs in [1, 3], random pose."""
    leg_a, leg_b = rng.uniform(1.0, 3.0, 2)
    theta = rng.uniform(0.0, 2.0 * math.pi)
    u = Point(math.cos(theta), math.sin(theta))
    flip = 1.0 if rng.uniform() < 0.5 else -1.0
    v = Point(-flip * u.y, flip * u.x)
    cx, cy = rng.uniform(-2.0, 2.0, 2)
    corner = Point(cx, cy)
    return Triangle(corner + leg_b * u, corner + leg_a * v, corner)


def sample_theorem2_point(
    rng: np.random.Generator, t: Triangle, tol: float
) -> tuple[Point, Point]:
    """Interior point with a usable conjugate: off the circumcircle band and
    with the conjugate clear of the formula's singular set. Returns (k, k1)."""
    circle = circumcircle(t, tol)
    r2 = circle.radius**2
    while True:
        k = sample_interior_point(rng, t)
        if abs(k.distance(circle.center) - circle.radius) <= tol * circle.radius:
            continue
        if min(k.distance(v) for v in t.vertices) <= tol * triangle_scale(t):
            continue
        conj = isogonal_conjugate(k, t, tol)
        if not conj.defined:
            continue
        if abs(r2 - conj.point.distance(circle.center) ** 2) <= CIRCLE_BAND * r2:
            continue
        return k, conj.point


# ---------------------------------------------------------------------------
# checks


def check_theorem1(rng, trials: int, tol: float) -> CheckResult:
    """Pedal area formula against the shoelace area of the built pedal triangle."""
    worst = 0.0
    for _ in range(trials):
        t = sample_triangle(rng)
        p = sample_point(rng)
        formula = pedal_area_ratio(p, t, tol)
        constructed = abs(signed_area(pedal_triangle(p, t, tol))) / abs(signed_area(t))
        worst = max(worst, relative_gap(formula, constructed))
    return _result("pedal_formula_vs_construction", trials, 1e-9, worst)


def check_seven_points(rng, trials: int, tol: float) -> CheckResult:
    """Formula ratio exactly 1/4 at the circumcenter, exactly 0 at the three
    vertices and their diametric opposites."""
    n = max(1, trials // 5)
    worst = 0.0
    for _ in range(n):
        t = sample_triangle(rng)
        circle = circumcircle(t, tol)
        worst = max(worst, abs(pedal_area_ratio(circle.center, t, tol) - 0.25))
        for v in t.vertices:
            worst = max(worst, pedal_area_ratio(v, t, tol))
            opposite = Point(2.0 * circle.center.x - v.x, 2.0 * circle.center.y - v.y)
            worst = max(worst, pedal_area_ratio(opposite, t, tol))
    return _result("pedal_seven_point_zeros", n, 1e-12, worst)


def check_decomposition(rng, trials: int, tol: float) -> CheckResult:
    """Signed distance decomposition: sign tracks the circumcircle side and the
    magnitude reproduces the pedal area. Points inside the exclusion band are
    resampled."""
    worst = 0.0
    for _ in range(trials):
        t = sample_triangle(rng)
        circle = circumcircle(t, tol)
        r2 = circle.radius**2
        while True:
            p = sample_point(rng)
            gap = r2 - p.distance(circle.center) ** 2
            if abs(gap) > CIRCLE_BAND * r2:
                break
        s = signed_decomposition(p, t, tol)
        if math.copysign(1.0, s) != math.copysign(1.0, gap):
            return _result("pedal_signed_decomposition", trials, 1e-9, 1.0)
        area = abs(signed_area(pedal_triangle(p, t, tol)))
        ref = abs(signed_area(t))
        worst = max(worst, abs(abs(s) - area) / max(area, ref))
    return _result("pedal_signed_decomposition", trials, 1e-9, worst)


def check_right_triangle_d(rng, trials: int, tol: float) -> CheckResult:
    """Both sides of the area identity at the mirror point D of a right triangle
    equal leg^2 / (2 R^2)."""
    n = max(1, trials // 5)
    worst = 0.0
    for _ in range(n):
        t = sample_right_triangle(rng)
        d_point, target = right_triangle_d_point(t, tol)
        formula = pedal_area_ratio(d_point, t, tol)
        constructed = abs(signed_area(pedal_triangle(d_point, t, tol))) / abs(signed_area(t))
        worst = max(worst, abs(formula - target) / target)
        worst = max(worst, abs(constructed - target) / target)
    return _result("pedal_right_triangle_d", n, 1e-12, worst)


def check_simson(rng, trials: int, tol: float) -> CheckResult:
    """Feet collinear exactly on the circumcircle: on-circle samples must flag
    collinear with tiny residual, clearly off-circle samples must not."""
    worst = 0.0
    for _ in range(trials):
        t = sample_triangle(rng)
        collinear, residual = simson_check(sample_on_circumcircle(rng, t), t, tol)
        if not collinear:
            return _result("pedal_simson_equivalence", trials, 1e-9, 1.0)
        worst = max(worst, residual)
        collinear, _ = simson_check(sample_off_circumcircle(rng, t), t, tol)
        if collinear:
            return _result("pedal_simson_equivalence", trials, 1e-9, 1.0)
    return _result("pedal_simson_equivalence", trials, 1e-9, worst)


def check_locus(rng, trials: int, tol: float) -> CheckResult:
    """Every sampled point of every locus circle reproduces the requested ratio;
    the circle count flips from two to one above ratio 1/4."""
    n = max(1, trials // 50)
    worst = 0.0
    for _ in range(n):
        t = sample_triangle(rng)
        for ratio in (0.05, 0.1875, 0.25, 1.0):
            circles = iso_area_locus(t, ratio, tol)
            expected = 2 if ratio <= 0.25 else 1
            if len(circles) != expected:
                return _result("pedal_iso_area_locus", n, 1e-9, 1.0)
            for circle in circles:
                for theta in rng.uniform(0.0, 2.0 * math.pi, 20):
                    p = Point(
                        circle.center.x + circle.radius * math.cos(theta),
                        circle.center.y + circle.radius * math.sin(theta),
                    )
                    worst = max(worst, relative_gap(pedal_area_ratio(p, t, tol), ratio))
    return _result("pedal_iso_area_locus", n, 1e-9, worst)


def check_theorem2(rng, trials: int, tol: float) -> CheckResult:
    """Antipedal area formula against the shoelace area of the built triangle."""
    worst = 0.0
    for _ in range(trials):
        t = sample_triangle(rng)
        k, _ = sample_theorem2_point(rng, t, tol)
        formula = antipedal_area_ratio(k, t, tol)
        constructed = abs(signed_area(antipedal_triangle(k, t, tol))) / abs(signed_area(t))
        worst = max(worst, relative_gap(formula, constructed))
    return _result("antipedal_formula_vs_construction", trials, 1e-8, worst)


def check_round_trip(rng, trials: int, tol: float) -> CheckResult:
    """The pedal triangle of k with respect to its antipedal triangle is the
    reference triangle again, vertex for vertex."""
    worst = 0.0
    for _ in range(trials):
        t = sample_triangle(rng)
        k, _ = sample_theorem2_point(rng, t, tol)
        back = pedal_triangle(k, antipedal_triangle(k, t, tol), tol)
        scale = triangle_scale(t)
        for original, returned in zip(t.vertices, back.vertices):
            worst = max(worst, original.distance(returned) / scale)
    return _result("antipedal_round_trip", trials, 1e-8, worst)


def check_reciprocity(rng, trials: int, tol: float) -> CheckResult:
    """Constructed areas: pedal(K1) area times antipedal(K) area equals the
    squared reference area."""
    worst = 0.0
    for _ in range(trials):
        t = sample_triangle(rng)
        k, k1 = sample_theorem2_point(rng, t, tol)
        pedal_area = abs(signed_area(pedal_triangle(k1, t, tol)))
        anti_area = abs(signed_area(antipedal_triangle(k, t, tol)))
        worst = max(worst, abs(pedal_area * anti_area / signed_area(t) ** 2 - 1.0))
    return _result("antipedal_reciprocity", trials, 1e-8, worst)


def check_homotopy_step(rng, trials: int, tol: float) -> CheckResult:
    """The antipedal triangle of K and the pedal triangle of K1 have pairwise
    parallel corresponding sides."""
    worst = 0.0
    for _ in range(trials):
        t = sample_triangle(rng)
        k, k1 = sample_theorem2_point(rng, t, tol)
        anti = antipedal_triangle(k, t, tol)
        feet = pedal_triangle(k1, t, tol)
        for u, v, p, q in (
            (anti.a, anti.b, feet.a, feet.b),
            (anti.b, anti.c, feet.b, feet.c),
            (anti.c, anti.a, feet.c, feet.a),
        ):
            d1 = u - v
            d2 = p - q
            worst = max(worst, abs(d1.cross(d2)) / (d1.norm() * d2.norm()))
    return _result("antipedal_pedal_homotopy", trials, 1e-9, worst)


def check_incenter_fixed(rng, trials: int, tol: float) -> CheckResult:
    """The incenter is its own isogonal conjugate."""
    n = max(1, trials // 5)
    worst = 0.0
    for _ in range(n):
        t = sample_triangle(rng)
        center = incenter(t)
        conj = isogonal_conjugate(center, t, tol)
        worst = max(worst, conj.point.distance(center) / triangle_scale(t))
    return _result("isogonal_incenter_fixed", n, 1e-10, worst)


def check_involution(rng, trials: int, tol: float) -> CheckResult:
    """Applying conjugation twice returns the starting point."""
    worst = 0.0
    count = 0
    for _ in range(trials):
        t = sample_triangle(rng)
        k, k1 = sample_theorem2_point(rng, t, tol)
        back = isogonal_conjugate(k1, t, tol)
        if not back.defined:
            continue
        count += 1
        worst = max(worst, back.point.distance(k) / triangle_scale(t))
    return _result("isogonal_involution", count, 1e-8, worst)


def check_concurrency(rng, trials: int, tol: float) -> CheckResult:
    """The three reflected cevians meet in one point: the pairwise
    intersections have negligible spread."""
    worst = 0.0
    for _ in range(trials):
        t = sample_triangle(rng)
        k, _ = sample_theorem2_point(rng, t, tol)
        ra, rb, rc = isogonal_rays(k, t, tol)
        p1 = line_intersection(ra, rb)
        p2 = line_intersection(ra, rc)
        p3 = line_intersection(rb, rc)
        g = centroid(t)
        reach = max(
            triangle_scale(t), p1.distance(g), p2.distance(g), p3.distance(g)
        )
        spread = max(p1.distance(p2), p1.distance(p3), p2.distance(p3))
        worst = max(worst, spread / reach)
    return _result("isogonal_concurrency_spread", trials, 1e-9, worst)


def check_circumcenter_orthocenter(rng, trials: int, tol: float) -> CheckResult:
    """Conjugation swaps the circumcenter with the orthocenter (built
    independently from two altitude lines)."""
    n = max(1, trials // 5)
    worst = 0.0
    for _ in range(n):
        t = sample_triangle(rng)
        conj = isogonal_conjugate(circumcircle(t, tol).center, t, tol)
        alt_a = line_with_normal(t.a, t.c - t.b)
        alt_b = line_with_normal(t.b, t.a - t.c)
        ortho = line_intersection(alt_a, alt_b)
        reach = max(triangle_scale(t), ortho.distance(centroid(t)))
        worst = max(worst, conj.point.distance(ortho) / reach)
    return _result("isogonal_circumcenter_to_orthocenter", n, 1e-8, worst)


def check_geometric_mean(rng, trials: int, tol: float) -> CheckResult:
    """Middle inscribed area squared equals outer area times inner area."""
    worst = 0.0
    for _ in range(trials):
        t = sample_triangle(rng)
        lhs, rhs = geometric_mean_identity(t, sample_ratio_triple(rng), tol)
        worst = max(worst, relative_gap(lhs, rhs, floor=signed_area(t) ** 2))
    return _result("inscribe_geometric_mean", trials, 1e-10, worst)


def check_inscribed_homotopy(rng, trials: int, tol: float) -> CheckResult:
    """The twice-inscribed triangle is homotopic to the outer one."""
    for _ in range(trials):
        t = sample_triangle(rng)
        _, inner = inscribe_c(t, sample_ratio_triple(rng), tol)
        matched, _ = homotopic_check(t, inner, tol)
        if not matched:
            return _result("inscribe_homotopic_to_outer", trials, 0.0, 1.0)
    return _result("inscribe_homotopic_to_outer", trials, 0.0, 0.0)


UNIT_TRIANGLE = Triangle(Point(0.0, 1.0), Point(0.0, 0.0), Point(1.0, 0.0))


def unit_chain_areas(k: RatioTriple) -> tuple[float, float]:
    """Closed-form inscribed areas on the unit right triangle: the middle
    triangle spans (k1*k2*k3 + 1) / ((1+k1)(1+k2)(1+k3)) halves, the inner
    one the square of that fraction."""
    product = (1.0 + k.k1) * (1.0 + k.k2) * (1.0 + k.k3)
    fraction = (k.k1 * k.k2 * k.k3 + 1.0) / product
    return 0.5 * fraction, 0.5 * fraction * fraction


def check_unit_closed_forms(rng, trials: int, tol: float) -> CheckResult:
    """Shoelace areas of the inscribed chain on the unit triangle match the
    closed forms in the ratios."""
    worst = 0.0
    for _ in range(trials):
        k = sample_ratio_triple(rng)
        b, c = inscribe_c(UNIT_TRIANGLE, k, tol)
        b_expected, c_expected = unit_chain_areas(k)
        worst = max(worst, abs(abs(signed_area(b)) - b_expected) / b_expected)
        worst = max(worst, abs(abs(signed_area(c)) - c_expected) / c_expected)
    return _result("inscribe_unit_closed_forms", trials, 1e-12, worst)


def check_ratio_round_trip(rng, trials: int, tol: float) -> CheckResult:
    """Measuring the ratios of an inscribed triangle recovers the inputs."""
    worst = 0.0
    for _ in range(trials):
        t = sample_triangle(rng)
        k = sample_ratio_triple(rng)
        measured = recover_ratios(t, inscribe_b(t, k, tol), tol)
        for given, got in (
            (k.k1, measured.k1),
            (k.k2, measured.k2),
            (k.k3, measured.k3),
        ):
            worst = max(worst, abs(given - got) / given)
    return _result("inscribe_ratio_round_trip", trials, 1e-10, worst)


def check_affine_invariance(rng, trials: int, tol: float) -> CheckResult:
    """Inscribed-chain area ratios do not change under invertible affine maps."""
    n = max(1, trials // 10)
    worst = 0.0
    for _ in range(n):
        t = sample_triangle(rng)
        k = sample_ratio_triple(rng)
        mapping = sample_affine(rng)
        image = transform_triangle(mapping, t)
        b0, c0 = inscribe_c(t, k, tol)
        b1, c1 = inscribe_c(image, k, tol)
        for before, after in ((b0, b1), (c0, c1)):
            r_before = abs(signed_area(before)) / abs(signed_area(t))
            r_after = abs(signed_area(after)) / abs(signed_area(image))
            worst = max(worst, abs(r_before - r_after) / r_before)
    return _result("inscribe_affine_invariance", n, 1e-8, worst)


def check_projection_idempotent(rng, trials: int, tol: float) -> CheckResult:
    """Projecting an already projected point changes nothing."""
    worst = 0.0
    for _ in range(trials):
        t = sample_triangle(rng)
        line = line_through(t.a, t.b, tol)
        foot = project_onto(sample_point(rng), line)
        again = project_onto(foot, line)
        worst = max(worst, foot.distance(again) / max(1.0, foot.norm()))
    return _result("core_projection_idempotent", trials, 1e-13, worst)


def check_circumcircle_equidistant(rng, trials: int, tol: float) -> CheckResult:
    """All three vertices sit at the same distance from the solved center."""
    worst = 0.0
    for _ in range(trials):
        t = sample_triangle(rng)
        circle = circumcircle(t, tol)
        for v in t.vertices:
            worst = max(
                worst, abs(v.distance(circle.center) - circle.radius) / circle.radius
            )
    return _result("core_circumcircle_equidistant", trials, 1e-12, worst)


def check_area_antisymmetry(rng, trials: int, tol: float) -> CheckResult:
    """Vertex swaps negate the signed area bit-exactly."""
    worst = 0.0
    for _ in range(trials):
        t = sample_triangle(rng)
        base = signed_area(t)
        a, b, c = t.vertices
        for pa, pb, pc, parity in (
            (a, c, b, -1.0),
            (b, a, c, -1.0),
            (c, b, a, -1.0),
            (b, c, a, 1.0),
            (c, a, b, 1.0),
        ):
            worst = max(worst, abs(signed_area(Triangle(pa, pb, pc)) - parity * base))
    return _result("core_signed_area_antisymmetry", trials, 0.0, worst)


def check_affine_round_trip(rng, trials: int, tol: float) -> CheckResult:
    """A map followed by its inverse is the identity."""
    worst = 0.0
    for _ in range(trials):
        mapping = sample_affine(rng)
        inverse = invert_affine(mapping)
        p = sample_point(rng)
        back = apply_affine(inverse, apply_affine(mapping, p))
        worst = max(worst, back.distance(p) / max(1.0, p.norm()))
    return _result("core_affine_round_trip", trials, 1e-10, worst)


def check_calibration(rng, trials: int, tol: float) -> CheckResult:
    """A calibrated side line always rates its calibration point positive."""
    for _ in range(trials):
        t = sample_triangle(rng)
        g = centroid(t)
        for p, q in ((t.a, t.b), (t.b, t.c), (t.c, t.a)):
            line = calibrate_interior(line_through(p, q, tol), g, tol)
            if not line.evaluate(g) > 0.0:
                return _result("core_calibration_positive", trials, 0.0, 1.0)
    return _result("core_calibration_positive", trials, 0.0, 0.0)


_CHECKS = (
    check_theorem1,
    check_seven_points,
    check_decomposition,
    check_right_triangle_d,
    check_simson,
    check_locus,
    check_theorem2,
    check_round_trip,
    check_reciprocity,
    check_homotopy_step,
    check_incenter_fixed,
    check_involution,
    check_concurrency,
    check_circumcenter_orthocenter,
    check_geometric_mean,
    check_inscribed_homotopy,
    check_unit_closed_forms,
    check_ratio_round_trip,
    check_affine_invariance,
    check_projection_idempotent,
    check_circumcircle_equidistant,
    check_area_antisymmetry,
    check_affine_round_trip,
    check_calibration,
)


def run_suite(seed: int, trials: int, tol: float = TOL) -> list[CheckResult]:
    """Run every check with independent streams spawned from ``seed``."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    streams = np.random.SeedSequence(seed).spawn(len(_CHECKS))
    return [
        check(np.random.default_rng(stream), trials, tol)
        for check, stream in zip(_CHECKS, streams)
    ]


def report_document(
    results: list[CheckResult], seed: int, trials: int, tol: float
) -> dict:
    """Assemble the deterministic report emitted by the command line."""
    doc: dict = {
        "seed": float(seed),
        "trials": float(trials),
        "tolerance": tol,
        "checks": float(len(results)),
    }
    for i, r in enumerate(results, start=1):
        prefix = f"check_{i:02d}"
        doc[f"{prefix}.name"] = r.name
        doc[f"{prefix}.samples"] = float(r.samples)
        doc[f"{prefix}.tolerance"] = r.tolerance
        doc[f"{prefix}.max_residual"] = r.max_residual
        doc[f"{prefix}.passed"] = r.passed
    doc["all_passed"] = all(r.passed for r in results)
    return doc
