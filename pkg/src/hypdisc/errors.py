"""Exception hierarchy shared by every module of the package."""


class GeometryError(ValueError):
    """Base class for invalid or degenerate geometric input."""


class DegenerateInput(GeometryError):
    pass


class PointOutsideDisc(GeometryError):
    pass


class PointNotOnGeodesic(GeometryError):
    pass


class CollinearPoints(GeometryError):
    pass


class NoCompactCircumcircle(GeometryError):
    """The three points lie on a horocycle or an equidistant, not a circle."""


class DegenerateTriangle(GeometryError):
    pass


class DomainError(GeometryError):
    pass


class ChordMisses(GeometryError):
    """The requested chord does not meet the open disc."""


class PointNotOnChord(GeometryError):
    pass


class InvalidSides(GeometryError):
    pass


class InvalidInput(GeometryError):
    pass
