"""Pedal and antipedal triangle constructions with verified area identities.

The package provides exact constructions (pedal triangles, isogonal
conjugates, antipedal triangles, doubly-inscribed chains), the closed-form
area ratios they satisfy, and a randomized verification suite that checks
formula against construction on demand.
"""

from .antipedal import (
    IsogonalResult,
    antipedal_area_ratio,
    antipedal_triangle,
    isogonal_conjugate,
    isogonal_rays,
)
from .core import (
    TOL,
    AffineMap,
    Circle,
    Line,
    Point,
    Triangle,
    affine_to_unit,
    apply_affine,
    calibrate_interior,
    centroid,
    circumcircle,
    incenter,
    invert_affine,
    is_degenerate,
    line_intersection,
    line_through,
    line_with_direction,
    line_with_normal,
    project_onto,
    signed_area,
    transform_triangle,
    triangle_scale,
)
from .errors import (
    CoincidentPoints,
    DegenerateInner,
    DegenerateTriangle,
    GeometryError,
    NearSingular,
    NegativeRatio,
    NonPositiveRatio,
    NotInscribed,
    NotRightTriangle,
    OnCircumcircle,
    ParallelLines,
    PointOnLine,
    VertexInput,
)
from .inscribe import (
    RatioTriple,
    divide_segment,
    geometric_mean_identity,
    homotopic_check,
    inscribe_b,
    inscribe_c,
    recover_ratios,
)
from .pedal import (
    CirclePosition,
    DirectedDistances,
    SignProfile,
    circle_position,
    directed_distances,
    iso_area_locus,
    pedal_area_ratio,
    pedal_triangle,
    right_triangle_d_point,
    side_lines,
    sign_profile,
    signed_decomposition,
    simson_check,
)

__version__ = "0.1.0"
