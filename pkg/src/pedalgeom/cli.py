"""Command-line front end.

Each subcommand reads one key-value document (``--input`` file or stdin),
runs the matching construction, and writes one document (``--output``
file or stdout); ``svg`` writes an SVG drawing instead and ``verify``
writes the deterministic suite report. Exit codes: 0 success, 1
verification failure, 2 usage or parse error, 3 geometric precondition
failure.
"""

from __future__ import annotations

import argparse
import sys

from . import antipedal as _antipedal
from . import inscribe as _inscribe
from . import pedal as _pedal
from . import svgfig, verify
from .core import Point, Triangle, circumcircle, signed_area
from .errors import GeometryError
from .inscribe import RatioTriple
from .textio import (
    DocumentError,
    Value,
    as_number,
    as_pair,
    emit_document,
    parse_document,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_GEOMETRY = 3


def _read_document(path: str | None) -> dict[str, Value]:
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    return parse_document(text)


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _point_field(doc: dict[str, Value], key: str) -> Point:
    if key not in doc:
        raise DocumentError(f"missing required key {key}")
    x, y = as_pair(doc[key], key)
    return Point(x, y)


def _triangle_field(doc: dict[str, Value]) -> Triangle:
    return Triangle(
        _point_field(doc, "triangle.a"),
        _point_field(doc, "triangle.b"),
        _point_field(doc, "triangle.c"),
    )


def _pair(p: Point) -> list[float]:
    return [p.x, p.y]


def _cmd_pedal(doc: dict[str, Value], tol: float) -> dict[str, Value]:
    t = _triangle_field(doc)
    p = _point_field(doc, "point")
    feet = _pedal.pedal_triangle(p, t, tol)
    d = _pedal.directed_distances(p, t, tol)
    profile = _pedal.sign_profile(p, t, tol)
    formula = _pedal.pedal_area_ratio(p, t, tol)
    constructed = abs(signed_area(feet)) / abs(signed_area(t))
    return {
        "foot_on_bc": _pair(feet.a),
        "foot_on_ca": _pair(feet.b),
        "foot_on_ab": _pair(feet.c),
        "distance_to_bc": d.d_a,
        "distance_to_ca": d.d_b,
        "distance_to_ab": d.d_c,
        "product_sign_ca_ab": float(profile.distance_product_signs[0]),
        "product_sign_bc_ab": float(profile.distance_product_signs[1]),
        "product_sign_bc_ca": float(profile.distance_product_signs[2]),
        "circumcircle_position": profile.inside_circumcircle.value,
        "area_ratio_formula": formula,
        "area_ratio_constructed": constructed,
        "area_ratio_difference": abs(formula - constructed),
    }


def _cmd_simson(doc: dict[str, Value], tol: float) -> dict[str, Value]:
    t = _triangle_field(doc)
    p = _point_field(doc, "point")
    collinear, residual = _pedal.simson_check(p, t, tol)
    feet = _pedal.pedal_triangle(p, t, tol)
    position = _pedal.circle_position(p, circumcircle(t, tol), tol)
    return {
        "collinear": collinear,
        "residual": residual,
        "foot_on_bc": _pair(feet.a),
        "foot_on_ca": _pair(feet.b),
        "foot_on_ab": _pair(feet.c),
        "circumcircle_position": position.value,
    }


def _cmd_isogonal(doc: dict[str, Value], tol: float) -> dict[str, Value]:
    t = _triangle_field(doc)
    p = _point_field(doc, "point")
    result = _antipedal.isogonal_conjugate(p, t, tol)
    out: dict[str, Value] = {"defined": result.defined}
    if result.defined:
        out["conjugate"] = _pair(result.point)
        out["displacement_from_input"] = result.point.distance(p)
    return out


def _cmd_antipedal(doc: dict[str, Value], tol: float) -> dict[str, Value]:
    t = _triangle_field(doc)
    p = _point_field(doc, "point")
    outer = _antipedal.antipedal_triangle(p, t, tol)
    conjugate = _antipedal.isogonal_conjugate(p, t, tol)
    formula = _antipedal.antipedal_area_ratio(p, t, tol)
    constructed = abs(signed_area(outer)) / abs(signed_area(t))
    back = _pedal.pedal_triangle(p, outer, tol)
    round_trip = max(u.distance(v) for u, v in zip(t.vertices, back.vertices))
    return {
        "vertex_t": _pair(outer.a),
        "vertex_u": _pair(outer.b),
        "vertex_v": _pair(outer.c),
        "conjugate": _pair(conjugate.point),
        "area_ratio_formula": formula,
        "area_ratio_constructed": constructed,
        "area_ratio_difference": abs(formula - constructed),
        "round_trip_residual": round_trip,
    }


def _cmd_inscribe(doc: dict[str, Value], tol: float) -> dict[str, Value]:
    t = _triangle_field(doc)
    raw = doc.get("ratios")
    if not isinstance(raw, list) or len(raw) != 3:
        raise DocumentError("ratios must be a three-number list [k1, k2, k3]")
    k = RatioTriple(
        as_number(raw[0], "ratios"),
        as_number(raw[1], "ratios"),
        as_number(raw[2], "ratios"),
    )
    b, c = _inscribe.inscribe_c(t, k, tol)
    lhs, rhs = _inscribe.geometric_mean_identity(t, k, tol)
    matched, _ = _inscribe.homotopic_check(t, c, tol)
    return {
        "inner_b.a": _pair(b.a),
        "inner_b.b": _pair(b.b),
        "inner_b.c": _pair(b.c),
        "inner_c.a": _pair(c.a),
        "inner_c.b": _pair(c.b),
        "inner_c.c": _pair(c.c),
        "area_outer": abs(signed_area(t)),
        "area_b": abs(signed_area(b)),
        "area_c": abs(signed_area(c)),
        "geometric_mean_lhs": lhs,
        "geometric_mean_rhs": rhs,
        "geometric_mean_difference": abs(lhs - rhs),
        "homotopic_to_outer": matched,
    }


def _cmd_locus(doc: dict[str, Value], tol: float) -> dict[str, Value]:
    t = _triangle_field(doc)
    if "ratio" not in doc:
        raise DocumentError("missing required key ratio")
    ratio = as_number(doc["ratio"], "ratio")
    circles = _pedal.iso_area_locus(t, ratio, tol)
    return {
        "ratio": ratio,
        "circle_count": float(len(circles)),
        "center": _pair(circles[0].center),
        "radii": [c.radius for c in circles],
    }


_COMMANDS = {
    "pedal": _cmd_pedal,
    "antipedal": _cmd_antipedal,
    "isogonal": _cmd_isogonal,
    "inscribe": _cmd_inscribe,
    "locus": _cmd_locus,
    "simson": _cmd_simson,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pedalgeom",
        description="Pedal, antipedal, and inscribed triangle constructions.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--tolerance",
        type=float,
        default=1e-9,
        help="relative tolerance for geometric predicates (default 1e-9)",
    )
    common.add_argument("--output", default=None, help="output file (default stdout)")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name in (*_COMMANDS, "svg"):
        sub = subparsers.add_parser(name, parents=[common])
        sub.add_argument("--input", default=None, help="input file (default stdin)")
    verify_parser = subparsers.add_parser("verify", parents=[common])
    verify_parser.add_argument("--seed", type=int, default=42)
    verify_parser.add_argument("--trials", type=int, default=1000)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            if args.trials < 1:
                parser.error("--trials must be >= 1")
            results = verify.run_suite(args.seed, args.trials, args.tolerance)
            report = verify.report_document(results, args.seed, args.trials, args.tolerance)
            _write_text(args.output, emit_document(report))
            return EXIT_OK if report["all_passed"] else EXIT_VERIFY_FAILED
        if args.command == "svg":
            scene = svgfig.scene_from_document(_read_document(args.input), args.tolerance)
            _write_text(args.output, svgfig.render_scene(scene, args.tolerance))
            return EXIT_OK
        handler = _COMMANDS[args.command]
        output = handler(_read_document(args.input), args.tolerance)
        _write_text(args.output, emit_document(output))
        return EXIT_OK
    except DocumentError as exc:
        print(f"pedalgeom: input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GeometryError as exc:
        print(f"pedalgeom: geometry error: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    except ValueError as exc:
        print(f"pedalgeom: input error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
