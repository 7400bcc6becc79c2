"""Exception types raised on violated geometric preconditions."""


class GeometryError(ValueError):
    """Base class for all geometric precondition failures."""


class DegenerateTriangle(GeometryError):
    """Reference triangle has (near-)zero area."""


class CoincidentPoints(GeometryError):
    """Two points expected to be distinct coincide."""


class PointOnLine(GeometryError):
    """Calibration point lies on the line it should orient."""


class ParallelLines(GeometryError):
    """Lines have no intersection point."""


class NotRightTriangle(GeometryError):
    """Triangle is not right-angled at its third vertex."""


class NegativeRatio(GeometryError):
    """Requested area ratio must be nonnegative."""


class NonPositiveRatio(GeometryError):
    """Segment division ratio must be strictly positive and finite."""


class VertexInput(GeometryError):
    """Query point coincides with a vertex of the reference triangle."""


class OnCircumcircle(GeometryError):
    """Query point lies on the circumcircle, where the construction blows up."""


class NearSingular(GeometryError):
    """Formula denominator is below the stability threshold."""


class DegenerateInner(GeometryError):
    """Inner inscribed triangle is degenerate."""


class NotInscribed(GeometryError):
    """A vertex does not lie strictly inside its matching side segment."""
