"""Scene descriptions and SVG rendering of the constructions.

A scene bundles one reference triangle with query points and draw toggles
(circumcircle, pedal triangles, three-feet lines, iso-ratio locus circles,
antipedal triangles, inscribed chains). Rendering emits standalone SVG 1.1
with the viewBox fitted to the drawn geometry plus a 10% margin and the
layers stacked bottom to top: circumcircle, reference triangle,
constructions, points, labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import antipedal as _antipedal
from . import inscribe as _inscribe
from . import pedal as _pedal
from .core import TOL, Circle, Point, Triangle, circumcircle, require_nondegenerate
from .errors import GeometryError
from .textio import DocumentError, Value, as_boolean, as_number, as_pair


class SceneError(GeometryError):
    """A scene element fails the preconditions of the module that draws it."""

    def __init__(self, element: str, message: str):
        self.element = element
        super().__init__(f"{element}: {message}")


@dataclass
class SceneDescription:
    """Validated drawing request: reference triangle, points, and toggles."""

    triangle: Triangle
    points: list[Point] = field(default_factory=list)
    draw_circumcircle: bool = False
    draw_pedal: bool = False
    draw_simson: bool = False
    draw_antipedal: bool = False
    locus_ratios: list[float] = field(default_factory=list)
    inscribe_ratios: _inscribe.RatioTriple | None = None
    show_labels: bool = True


_SCENE_KEYS = {
    "triangle.a",
    "triangle.b",
    "triangle.c",
    "points",
    "draw.circumcircle",
    "draw.pedal",
    "draw.simson",
    "draw.antipedal",
    "draw.locus",
    "draw.inscribed",
    "labels",
}


def scene_from_document(doc: dict[str, Value], tol: float = TOL) -> SceneDescription:
    """Build and validate a scene from a parsed document.

    Structural problems (wrong types, unknown keys) raise
    :class:`DocumentError`; geometric precondition failures raise
    :class:`SceneError` naming the offending element.
    """
    unknown = set(doc) - _SCENE_KEYS
    if unknown:
        raise DocumentError(f"unknown scene keys: {', '.join(sorted(unknown))}")
    for key in ("triangle.a", "triangle.b", "triangle.c"):
        if key not in doc:
            raise DocumentError(f"missing required key {key}")

    def point_of(key: str) -> Point:
        x, y = as_pair(doc[key], key)
        return Point(x, y)

    triangle = Triangle(point_of("triangle.a"), point_of("triangle.b"), point_of("triangle.c"))

    points: list[Point] = []
    raw_points = doc.get("points", [])
    if not isinstance(raw_points, list):
        raise DocumentError("points must be a list of [x, y] pairs")
    for i, raw in enumerate(raw_points):
        x, y = as_pair(raw, f"points[{i}]")
        points.append(Point(x, y))

    locus_ratios: list[float] = []
    raw_locus = doc.get("draw.locus", [])
    if not isinstance(raw_locus, list):
        raise DocumentError("draw.locus must be a list of ratios")
    for i, raw in enumerate(raw_locus):
        locus_ratios.append(as_number(raw, f"draw.locus[{i}]"))

    inscribe_ratios = None
    if "draw.inscribed" in doc:
        raw = doc["draw.inscribed"]
        if not isinstance(raw, list) or len(raw) != 3:
            raise DocumentError("draw.inscribed must be a three-ratio list [k1, k2, k3]")
        try:
            inscribe_ratios = _inscribe.RatioTriple(
                as_number(raw[0], "draw.inscribed"),
                as_number(raw[1], "draw.inscribed"),
                as_number(raw[2], "draw.inscribed"),
            )
        except GeometryError as exc:
            raise SceneError("draw.inscribed", str(exc)) from exc

    scene = SceneDescription(
        triangle=triangle,
        points=points,
        draw_circumcircle=as_boolean(doc.get("draw.circumcircle", False), "draw.circumcircle"),
        draw_pedal=as_boolean(doc.get("draw.pedal", False), "draw.pedal"),
        draw_simson=as_boolean(doc.get("draw.simson", False), "draw.simson"),
        draw_antipedal=as_boolean(doc.get("draw.antipedal", False), "draw.antipedal"),
        locus_ratios=locus_ratios,
        inscribe_ratios=inscribe_ratios,
        show_labels=as_boolean(doc.get("labels", True), "labels"),
    )
    _validate(scene, tol)
    return scene


def _validate(scene: SceneDescription, tol: float) -> None:
    try:
        require_nondegenerate(scene.triangle, tol)
    except GeometryError as exc:
        raise SceneError("triangle", str(exc)) from exc
    for i, p in enumerate(scene.points):
        if scene.draw_antipedal:
            try:
                _antipedal.antipedal_triangle(p, scene.triangle, tol)
            except GeometryError as exc:
                raise SceneError(f"points[{i}]", str(exc)) from exc
    for i, ratio in enumerate(scene.locus_ratios):
        try:
            _pedal.iso_area_locus(scene.triangle, ratio, tol)
        except GeometryError as exc:
            raise SceneError(f"draw.locus[{i}]", str(exc)) from exc
    if (scene.draw_pedal or scene.draw_simson or scene.draw_antipedal) and not scene.points:
        raise SceneError("points", "construction toggles need at least one point")


def _fmt(x: float) -> str:
    return f"{x:.6g}"


class _Canvas:
    """Accumulates elements per layer while tracking the drawn bounding box."""

    def __init__(self) -> None:
        self.layers: dict[str, list[str]] = {
            "circumcircle": [],
            "reference-triangle": [],
            "constructions": [],
            "points": [],
            "labels": [],
        }
        self.min_x = self.min_y = float("inf")
        self.max_x = self.max_y = float("-inf")

    def _touch(self, x: float, y: float) -> None:
        self.min_x = min(self.min_x, x)
        self.max_x = max(self.max_x, x)
        self.min_y = min(self.min_y, -y)
        self.max_y = max(self.max_y, -y)

    def polygon(self, layer: str, cls: str, pts: tuple[Point, ...], stroke: str) -> None:
        for p in pts:
            self._touch(p.x, p.y)
        joined = " ".join(f"{_fmt(p.x)},{_fmt(-p.y)}" for p in pts)
        self.layers[layer].append(
            f'<polygon class="{cls}" points="{joined}" fill="none" stroke="{stroke}"/>'
        )

    def circle(self, layer: str, cls: str, c: Circle, stroke: str) -> None:
        self._touch(c.center.x - c.radius, c.center.y - c.radius)
        self._touch(c.center.x + c.radius, c.center.y + c.radius)
        self.layers[layer].append(
            f'<circle class="{cls}" cx="{_fmt(c.center.x)}" cy="{_fmt(-c.center.y)}" '
            f'r="{_fmt(c.radius)}" fill="none" stroke="{stroke}"/>'
        )

    def segment(self, layer: str, cls: str, p: Point, q: Point, stroke: str) -> None:
        self._touch(p.x, p.y)
        self._touch(q.x, q.y)
        self.layers[layer].append(
            f'<line class="{cls}" x1="{_fmt(p.x)}" y1="{_fmt(-p.y)}" '
            f'x2="{_fmt(q.x)}" y2="{_fmt(-q.y)}" stroke="{stroke}"/>'
        )

    def marker(self, cls: str, p: Point, fill: str) -> None:
        # Radius depends on the final view size; fill it in at render time.
        self._touch(p.x, p.y)
        self.layers["points"].append(
            f'<circle class="{cls}" cx="{_fmt(p.x)}" cy="{_fmt(-p.y)}" r="@R@" fill="{fill}"/>'
        )

    def label(self, text: str, p: Point) -> None:
        self._touch(p.x, p.y)
        self.layers["labels"].append(
            f'<text class="label" x="{_fmt(p.x)}" y="{_fmt(-p.y)}">{text}</text>'
        )


def render_scene(scene: SceneDescription, tol: float = TOL) -> str:
    """Render a validated scene to an SVG 1.1 document string."""
    _validate(scene, tol)
    canvas = _Canvas()
    t = scene.triangle

    if scene.draw_circumcircle or scene.draw_simson or scene.locus_ratios:
        canvas.circle("circumcircle", "circumcircle", circumcircle(t, tol), "#b0b0b0")

    canvas.polygon("reference-triangle", "reference-triangle", t.vertices, "#202020")

    for ratio in scene.locus_ratios:
        for circle in _pedal.iso_area_locus(t, ratio, tol):
            canvas.circle("constructions", "locus-circle", circle, "#2a9d8f")

    if scene.inscribe_ratios is not None:
        inner_b, inner_c = _inscribe.inscribe_c(t, scene.inscribe_ratios, tol)
        canvas.polygon("constructions", "inscribed-b", inner_b.vertices, "#e07b39")
        canvas.polygon("constructions", "inscribed-c", inner_c.vertices, "#9b5de5")

    for i, p in enumerate(scene.points, start=1):
        feet = _pedal.pedal_triangle(p, t, tol) if (scene.draw_pedal or scene.draw_simson) else None
        if scene.draw_pedal and feet is not None:
            canvas.polygon("constructions", "pedal-triangle", feet.vertices, "#1f77b4")
        if scene.draw_simson and feet is not None:
            collinear, _ = _pedal.simson_check(p, t, tol)
            if collinear:
                ends = max(
                    ((u, v) for u in feet.vertices for v in feet.vertices),
                    key=lambda pair: pair[0].distance(pair[1]),
                )
                stretch = (ends[1] - ends[0]) * 0.15
                canvas.segment(
                    "constructions",
                    "simson-line",
                    ends[0] - stretch,
                    ends[1] + stretch,
                    "#d62728",
                )
        if scene.draw_antipedal:
            outer = _antipedal.antipedal_triangle(p, t, tol)
            canvas.polygon("constructions", "antipedal-triangle", outer.vertices, "#6a994e")
            conjugate = _antipedal.isogonal_conjugate(p, t, tol)
            if conjugate.defined:
                conj_feet = _pedal.pedal_triangle(conjugate.point, t, tol)
                canvas.polygon(
                    "constructions", "conjugate-pedal-triangle", conj_feet.vertices, "#bc4749"
                )
                canvas.marker("conjugate-point", conjugate.point, "#bc4749")
                if scene.show_labels:
                    canvas.label(f"Q{i}", conjugate.point)
        if feet is not None:
            for foot in feet.vertices:
                canvas.marker("foot", foot, "#1f77b4")
        canvas.marker("query-point", p, "#d62728")
        if scene.show_labels:
            canvas.label(f"P{i}", p)

    for vertex in t.vertices:
        canvas.marker("vertex", vertex, "#202020")
    if scene.show_labels:
        for name, vertex in zip("ABC", t.vertices):
            canvas.label(name, vertex)

    width = canvas.max_x - canvas.min_x
    height = canvas.max_y - canvas.min_y
    margin = 0.1 * max(width, height, 1e-6)
    view = (
        canvas.min_x - margin,
        canvas.min_y - margin,
        width + 2.0 * margin,
        height + 2.0 * margin,
    )
    stroke_width = 0.004 * max(view[2], view[3])
    marker_radius = 2.0 * stroke_width
    font_size = 8.0 * stroke_width

    body = []
    for name in ("circumcircle", "reference-triangle", "constructions", "points", "labels"):
        body.append(f'<g id="{name}">')
        for element in canvas.layers[name]:
            body.append("  " + element.replace('"@R@"', f'"{_fmt(marker_radius)}"'))
        body.append("</g>")
    return "\n".join(
        [
            '<?xml version="1.0" encoding="UTF-8"?>',
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'viewBox="{_fmt(view[0])} {_fmt(view[1])} {_fmt(view[2])} {_fmt(view[3])}" '
            f'stroke-width="{_fmt(stroke_width)}" font-size="{_fmt(font_size)}">',
            *body,
            "</svg>",
            "",
        ]
    )
